#include "hss/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hss {

namespace {

std::vector<long> to_long_vec(const RatVec& v) {
  std::vector<long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (denominator(v[i]) != 1) throw std::logic_error("non-integer simple coefficient");
    out[i] = static_cast<long>(numerator(v[i]).convert_to<long long>());
  }
  return out;
}

// Closes the positive system up from the simple roots by root strings:
// beta + alpha is a root iff q - <beta, alpha^vee> > 0 where q is the
// largest k with beta - k*alpha a root.
std::vector<Root> close_positive_system(const std::vector<RatVec>& simples) {
  const std::size_t rank = simples.size();
  std::map<std::vector<long>, RatVec> found;  // simple coeffs -> ambient

  std::vector<std::vector<long>> frontier;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<long> c(rank, 0);
    c[i] = 1;
    found.emplace(c, simples[i]);
    frontier.push_back(c);
  }

  auto ambient_of = [&](const std::vector<long>& c) {
    RatVec v(simples[0].size(), Rat(0));
    for (std::size_t i = 0; i < rank; ++i)
      if (c[i] != 0)
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += Rat(c[i]) * simples[i][t];
    return v;
  };

  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& c : frontier) {
      const RatVec beta = ambient_of(c);
      for (std::size_t i = 0; i < rank; ++i) {
        // q = depth of the alpha_i string below beta
        long qdepth = 0;
        std::vector<long> down = c;
        while (true) {
          down[i] -= 1;
          bool negative_ok = true;
          std::vector<long> probe = down;
          bool all_nonpos = std::all_of(probe.begin(), probe.end(), [](long t) { return t <= 0; });
          if (all_nonpos) {
            // could only be a negative root or zero; the negatives of
            // positive roots never appear below a positive root string
            // except the trivial alpha_i - alpha_i = 0 case
            bool all_zero = std::all_of(probe.begin(), probe.end(), [](long t) { return t == 0; });
            negative_ok = false;
            if (all_zero) break;
          }
          if (negative_ok && found.count(probe)) {
            ++qdepth;
          } else {
            break;
          }
        }
        const Rat num = 2 * dot(beta, simples[i]);
        const Rat den = dot(simples[i], simples[i]);
        const Rat cartan = num / den;  // <beta, alpha_i^vee>, an integer
        const Rat pval = Rat(qdepth) - cartan;
        if (pval > 0) {
          std::vector<long> up = c;
          up[i] += 1;
          if (!found.count(up)) {
            found.emplace(up, ambient_of(up));
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Root> out;
  out.reserve(found.size());
  for (const auto& [c, amb] : found) {
    Root r;
    r.ambient = amb;
    r.simple_coeff.reserve(rank);
    r.height = 0;
    for (long t : c) {
      r.simple_coeff.push_back(Rat(t));
      r.height += t;
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return to_long_vec(a.simple_coeff) < to_long_vec(b.simple_coeff);
  });
  return out;
}

RatVec unit(std::size_t dim, std::size_t i) {
  RatVec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

RatVec diff(std::size_t dim, std::size_t i, std::size_t j) {
  RatVec v(dim, Rat(0));
  v[i] = 1;
  v[j] = -1;
  return v;
}

RootDatum finish(std::string label, std::size_t ambient_dim, std::vector<RatVec> simples,
                 std::size_t expected_positive) {
  RootDatum d;
  d.label = std::move(label);
  d.rank = simples.size();
  d.ambient_dim = ambient_dim;
  d.simple_roots = std::move(simples);
  d.positive_roots = close_positive_system(d.simple_roots);
  if (d.positive_roots.size() != expected_positive)
    throw std::logic_error(d.label + ": positive root count " +
                           std::to_string(d.positive_roots.size()) + " != expected " +
                           std::to_string(expected_positive));
  return d;
}

}  // namespace

bool RootDatum::is_positive_root(const RatVec& v) const {
  for (const Root& r : positive_roots)
    if (r.ambient == v) return true;
  return false;
}

bool RootDatum::is_root(const RatVec& v) const {
  if (is_positive_root(v)) return true;
  RatVec neg(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  return is_positive_root(neg);
}

RootDatum build_root_system_A(std::size_t m) {
  if (m < 1) throw std::invalid_argument("A_m: m >= 1");
  std::vector<RatVec> simples;
  for (std::size_t i = 0; i < m; ++i) simples.push_back(diff(m + 1, i, i + 1));
  return finish("A" + std::to_string(m), m + 1, std::move(simples), m * (m + 1) / 2);
}

RootDatum build_root_system_B(std::size_t m) {
  if (m < 2) throw std::invalid_argument("B_m: m >= 2");
  std::vector<RatVec> simples;
  for (std::size_t i = 0; i + 1 < m; ++i) simples.push_back(diff(m, i, i + 1));
  simples.push_back(unit(m, m - 1));
  return finish("B" + std::to_string(m), m, std::move(simples), m * m);
}

RootDatum build_root_system_C(std::size_t m) {
  if (m < 2) throw std::invalid_argument("C_m: m >= 2");
  std::vector<RatVec> simples;
  for (std::size_t i = 0; i + 1 < m; ++i) simples.push_back(diff(m, i, i + 1));
  RatVec last = unit(m, m - 1);
  last[m - 1] = 2;
  simples.push_back(std::move(last));
  return finish("C" + std::to_string(m), m, std::move(simples), m * m);
}

RootDatum build_root_system_D(std::size_t m) {
  if (m < 3) throw std::invalid_argument("D_m: m >= 3");
  std::vector<RatVec> simples;
  for (std::size_t i = 0; i + 1 < m; ++i) simples.push_back(diff(m, i, i + 1));
  RatVec last(m, Rat(0));
  last[m - 2] = 1;
  last[m - 1] = 1;
  simples.push_back(std::move(last));
  return finish("D" + std::to_string(m), m, std::move(simples), m * (m - 1));
}

namespace {

// Bourbaki simple roots of E7 in R^8 (E6 is the subsystem on alpha_1..alpha_6).
std::vector<RatVec> e_simples(std::size_t count) {
  const Rat h(1, 2);
  RatVec a1 = {h, -h, -h, -h, -h, -h, -h, h};
  RatVec a2(8, Rat(0));
  a2[0] = 1;
  a2[1] = 1;
  std::vector<RatVec> simples = {a1, a2};
  for (std::size_t i = 0; i + 2 < count; ++i) {
    RatVec a(8, Rat(0));
    a[i] = -1;
    a[i + 1] = 1;
    simples.push_back(std::move(a));
  }
  return simples;
}

}  // namespace

RootDatum build_root_system_E6() { return finish("E6", 8, e_simples(6), 36); }

RootDatum build_root_system_E7() { return finish("E7", 8, e_simples(7), 63); }

MarkedDatum build_marked_datum(const HSSFamily& f) {
  MarkedDatum md;
  switch (f.tag) {
    case FamilyTag::Grassmann:
      md.datum = build_root_system_A(f.p + f.q - 1);
      md.marked_node = f.p;
      break;
    case FamilyTag::OrthGrassmann:
      md.datum = build_root_system_D(f.n);
      md.marked_node = f.n;
      break;
    case FamilyTag::LagGrassmann:
      md.datum = build_root_system_C(f.n);
      md.marked_node = f.n;
      break;
    case FamilyTag::Quadric:
      if (f.n % 2 == 1) {
        md.datum = build_root_system_B((f.n + 1) / 2);
      } else {
        md.datum = build_root_system_D(f.n / 2 + 1);
      }
      md.marked_node = 1;
      break;
    case FamilyTag::CayleyPlane:
      md.datum = build_root_system_E6();
      md.marked_node = 1;
      break;
    case FamilyTag::Freudenthal:
      md.datum = build_root_system_E7();
      md.marked_node = 7;
      break;
  }
  for (const Root& r : md.datum.positive_roots) {
    const Rat& c = r.simple_coeff[md.marked_node - 1];
    if (c != 0 && c != 1)
      throw std::logic_error("marked node is not cominuscule for " + f.name());
    if (c == 1) md.noncompact.push_back(r);
  }
  return md;
}

}  // namespace hss
