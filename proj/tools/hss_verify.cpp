// Command-line front end: family/parameter selection, direct map evaluation,
// suite execution with seeds and trial counts, JSON/plain reporting, and
// fixture generation.

#include "hss/lm_map.hpp"
#include "hss/serialization.hpp"
#include "hss/strata.hpp"
#include "hss/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string family;
  std::optional<std::size_t> p, q, n;
  std::string form = "split";
};

void add_family_flags(CLI::App* cmd, CommonOpts& opts, bool required) {
  auto* f = cmd->add_option("--family", opts.family,
                            "grassmann | orth-grassmann | lag-grassmann | quadric | "
                            "cayley-plane | freudenthal | all");
  if (required) f->required();
  cmd->add_option("--p", opts.p, "Grassmann row parameter");
  cmd->add_option("--q", opts.q, "Grassmann column parameter");
  cmd->add_option("--n", opts.n, "parameter n (orth/lag/quadric)");
  cmd->add_option("--form", opts.form, "quadric form: split | sum-squares")
      ->check(CLI::IsMember({"split", "sum-squares"}));
}

hss::HSSFamily family_from_opts(const CommonOpts& opts) {
  const hss::QuadricForm form = opts.form == "sum-squares" ? hss::QuadricForm::SumSquares
                                                           : hss::QuadricForm::Split;
  if (opts.family == "grassmann") {
    if (!opts.p || !opts.q) throw CLI::ValidationError("grassmann requires --p and --q");
    return hss::HSSFamily::grassmann(*opts.p, *opts.q);
  }
  if (opts.family == "orth-grassmann") {
    if (!opts.n) throw CLI::ValidationError("orth-grassmann requires --n");
    return hss::HSSFamily::orth_grassmann(*opts.n);
  }
  if (opts.family == "lag-grassmann") {
    if (!opts.n) throw CLI::ValidationError("lag-grassmann requires --n");
    return hss::HSSFamily::lag_grassmann(*opts.n);
  }
  if (opts.family == "quadric") {
    if (!opts.n) throw CLI::ValidationError("quadric requires --n");
    return hss::HSSFamily::quadric(*opts.n, form);
  }
  if (opts.family == "cayley-plane") return hss::HSSFamily::cayley_plane();
  if (opts.family == "freudenthal") return hss::HSSFamily::freudenthal();
  throw CLI::ValidationError("unknown family: " + opts.family);
}

hss::ProjPoint parse_point(const std::string& text) {
  return hss::proj_point(hss::vec_from_json(json::parse(text)));
}

hss::TangentVec parse_tangent(const hss::HSSFamily& f, const std::string& text) {
  json j = json::parse(text);
  if (j.is_object() && j.contains("payload")) return hss::tangent_from_json(j);
  json wrapped = hss::family_to_json(f);
  wrapped["payload"] = std::move(j);
  return hss::tangent_from_json(wrapped);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json point_with_stratum(const hss::HSSFamily& f, const hss::ProjPoint& z) {
  json out = hss::proj_point_to_json(z);
  out["stratum"] = hss::classify_stratum(f, z).to_string();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact birational maps between Hermitian symmetric spaces and "
               "projective space: evaluation, stratification and randomized "
               "verification"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string point_text, elem_text, format = "json", fixtures_dir = ".";
  std::vector<std::string> suites;
  std::size_t trials = 100;
  std::uint64_t seed = 1;

  auto* cmd_info = app.add_subcommand("info", "model dimensions and block sizes");
  add_family_flags(cmd_info, opts, true);

  auto* cmd_phi = app.add_subcommand("phi", "evaluate the map P^n -> P^N");
  add_family_flags(cmd_phi, opts, true);
  cmd_phi->add_option("--point", point_text, "homogeneous coordinates, JSON array")->required();

  auto* cmd_psi = app.add_subcommand("psi", "project P^N -> P^n (first two blocks)");
  add_family_flags(cmd_psi, opts, true);
  cmd_psi->add_option("--point", point_text, "homogeneous coordinates, JSON array")->required();

  auto* cmd_limit = app.add_subcommand("limit", "C*-flow limit of a tangent vector");
  add_family_flags(cmd_limit, opts, true);
  cmd_limit->add_option("--elem", elem_text, "tangent vector JSON")->required();

  auto* cmd_rank = app.add_subcommand("rank", "rank of a tangent vector");
  add_family_flags(cmd_rank, opts, true);
  cmd_rank->add_option("--elem", elem_text, "tangent vector JSON")->required();

  auto* cmd_classify = app.add_subcommand("classify", "stratum of a graded point of P^N");
  add_family_flags(cmd_classify, opts, true);
  cmd_classify->add_option("--point", point_text, "homogeneous coordinates, JSON array")
      ->required();

  auto* cmd_suite = app.add_subcommand("suite", "run randomized verification suites");
  add_family_flags(cmd_suite, opts, false);
  cmd_suite->add_option("--suite", suites, "suite names (default: all)");
  cmd_suite->add_option("--trials", trials, "trials per property");
  cmd_suite->add_option("--seed", seed, "PRNG seed (SplitMix64)");
  cmd_suite->add_option("--format", format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* cmd_fixtures = app.add_subcommand("fixtures", "write fixture files");
  cmd_fixtures->add_option("--fixtures", fixtures_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (cmd_info->parsed()) {
      const hss::HSSFamily f = family_from_opts(opts);
      const hss::ModelInfo info = hss::model_info(f);
      emit(json{{"family", f.name()},
                {"n", info.n},
                {"r", info.r},
                {"N", info.N},
                {"blocks", info.block_sizes}});
    } else if (cmd_phi->parsed()) {
      const hss::HSSFamily f = family_from_opts(opts);
      emit(point_with_stratum(f, hss::phi(f, parse_point(point_text))));
    } else if (cmd_psi->parsed()) {
      const hss::HSSFamily f = family_from_opts(opts);
      emit(hss::proj_point_to_json(hss::psi(f, parse_point(point_text))));
    } else if (cmd_limit->parsed()) {
      const hss::HSSFamily f = family_from_opts(opts);
      const hss::TangentVec v = parse_tangent(f, elem_text);
      emit(point_with_stratum(f, hss::phi_limit_at_infinity(v)));
    } else if (cmd_rank->parsed()) {
      const hss::HSSFamily f = family_from_opts(opts);
      emit(json{{"rank", hss::tangent_rank(parse_tangent(f, elem_text))}});
    } else if (cmd_classify->parsed()) {
      const hss::HSSFamily f = family_from_opts(opts);
      const hss::ProjPoint z = hss::proj_point(
          hss::vec_from_json(json::parse(point_text)), hss::model_info(f).block_sizes);
      emit(json{{"stratum", hss::classify_stratum(f, z).to_string()}});
    } else if (cmd_suite->parsed()) {
      hss::SuiteConfig cfg;
      cfg.family = opts.family.empty() ? "all" : opts.family;
      cfg.p = opts.p;
      cfg.q = opts.q;
      cfg.n = opts.n;
      cfg.form = opts.form == "sum-squares" ? hss::QuadricForm::SumSquares
                                            : hss::QuadricForm::Split;
      cfg.suites = suites;
      cfg.trials = trials;
      cfg.seed = seed;
      hss::Report report;
      try {
        report = hss::run_suite(cfg);
      } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
      }
      if (format == "text")
        std::cout << report.to_text();
      else
        emit(report.to_json());
      return report.pass() ? 0 : 1;
    } else if (cmd_fixtures->parsed()) {
      {
        std::ofstream out(fixtures_dir + "/table_dims.json");
        out << hss::generate_table_fixture().dump(2) << "\n";
      }
      {
        json out;
        out["schema_version"] = 1;
        json entries = json::array();
        for (std::size_t q = 2; q <= 4; ++q)
          for (std::size_t p = q; p <= 4; ++p) {
            const hss::SignedPermutation sp = hss::plucker_alignment(p, q);
            entries.push_back(json{{"p", p}, {"q", q}, {"perm", sp.perm}, {"sign", sp.sign}});
          }
        out["alignments"] = std::move(entries);
        std::ofstream file(fixtures_dir + "/plucker_alignment.json");
        file << out.dump(2) << "\n";
      }
      std::cout << "wrote table_dims.json and plucker_alignment.json to " << fixtures_dir
                << "\n";
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
