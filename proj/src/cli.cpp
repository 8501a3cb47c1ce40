#include "posalg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "posalg/errors.hpp"
#include "posalg/idempot.hpp"
#include "posalg/lattice.hpp"
#include "posalg/matrix_io.hpp"
#include "posalg/random_check.hpp"
#include "posalg/repro.hpp"
#include "posalg/spanalg.hpp"
#include "posalg/supercone.hpp"

namespace posalg {

namespace {

struct Output {
  std::ostream& out;
  bool pretty = false;
  bool all_pass = true;

  void emit(const Json& j) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }
  void emit(const Report& r) {
    all_pass = all_pass && r.pass;
    emit(to_json(r));
  }
};

std::vector<Mat> load_family(const std::vector<std::string>& paths) {
  std::vector<Mat> out;
  for (const auto& p : paths) {
    Mat m = load_matrix(p);
    require_square(m, p.c_str());
    if (!out.empty()) require_same_shape(out.front(), m, p.c_str());
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t trial_budget() {
  const char* env = std::getenv("POSALG_TRIAL_BUDGET");
  if (env == nullptr || *env == '\0') return default_trial_budget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw InputError(std::string("POSALG_TRIAL_BUDGET: not a positive integer: ") + env);
  return static_cast<std::size_t>(v);
}

Json words_json(const AlgebraBasis& alg) {
  const auto names = default_names(alg.generators.size());
  Json words = Json::array();
  for (const auto& w : alg.words) words.push_back(to_string(w, names));
  return words;
}

void print_repro_table(std::ostream& out, const std::vector<ReproRow>& rows) {
  std::size_t width = 8;
  for (const auto& r : rows) width = std::max(width, r.claim_id.size());
  out << std::left << std::setw(static_cast<int>(width)) << "claim" << "  " << std::setw(9) << "expected" << "  "
      << std::setw(9) << "computed" << "  status  source\n";
  for (const auto& r : rows) {
    out << std::setw(static_cast<int>(width)) << r.claim_id << "  " << std::setw(9) << to_string(r.expected) << "  "
        << std::setw(9) << to_string(r.computed) << "  " << (r.pass ? "PASS  " : "FAIL  ") << "  " << r.source
        << '\n';
  }
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for positive matrices, commutant cones and idempotent pairs", "posalg"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  bool serial = false;
  app.add_flag("--pretty", pretty, "Indented JSON / tables instead of JSON lines");
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  std::vector<std::string> files;
  bool unital = false;
  auto* alg_cmd = app.add_subcommand("algebra-dim", "Dimension of the algebra generated by the matrices");
  alg_cmd->add_option("files", files, "Matrix JSON files")->required();
  alg_cmd->add_flag("--unital", unital, "Include the identity");

  auto* tri_cmd = app.add_subcommand("triangularizable", "Simultaneous triangularizability of a family");
  tri_cmd->add_option("files", files, "Matrix JSON files")->required();

  std::string file;
  auto* frob_cmd = app.add_subcommand("frobenius", "Frobenius normal form of a nonnegative matrix");
  frob_cmd->add_option("file", file, "Matrix JSON file")->required();

  std::string side = "left";
  auto* cone_cmd = app.add_subcommand("supercone", "Span of the super left- or right-commutant");
  cone_cmd->add_option("file", file, "Matrix JSON file");
  cone_cmd->add_option("--matrix", file, "Matrix JSON file");
  cone_cmd->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));

  std::string file_e, file_f, what;
  auto* idem_cmd = app.add_subcommand("idem-check", "Checks on a pair of nonnegative idempotents");
  idem_cmd->add_option("E", file_e, "Matrix JSON file for E")->required();
  idem_cmd->add_option("F", file_f, "Matrix JSON file for F (A for --what key)")->required();
  idem_cmd->add_option("--what", what, "nine, band, key or two-idem")
      ->required()
      ->check(CLI::IsMember({"nine", "band", "key", "two-idem"}));

  auto* band_cmd = app.add_subcommand("band-split", "Four-band decomposition of a nonnegative idempotent");
  band_cmd->add_option("file", file, "Matrix JSON file")->required();

  std::string example, prefix;
  auto* ex_cmd = app.add_subcommand("build-example", "Emit a named example: ks7, ks6, n2, even(k), odd(k), rank_one(u;v)");
  ex_cmd->add_option("name", example, "Example name")->required();
  ex_cmd->add_option("--out", prefix, "Write <prefix>_E.json and <prefix>_F.json");

  auto* repro_cmd = app.add_subcommand("repro", "Run the fixed reproduction suite");

  std::string theorem;
  CheckConfig cfg;
  auto* rc_cmd = app.add_subcommand("random-check", "Seeded randomized check of a theorem");
  rc_cmd->add_option("--theorem", theorem, "thm_one, thm_finitely, thm_main, thm_key, lemma_zero_fd, band_split")
      ->required();
  rc_cmd->add_option("--trials", cfg.trials, "Number of trials")->check(CLI::PositiveNumber);
  rc_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  rc_cmd->add_option("--n-min", cfg.n_min, "Smallest size (default per theorem)");
  rc_cmd->add_option("--n-max", cfg.n_max, "Largest size (default per theorem)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Output o{out, pretty};
  const Exec exec = serial ? Exec::serial : Exec::parallel;
  try {
    if (alg_cmd->parsed()) {
      const auto gens = load_family(files);
      const AlgebraBasis alg = algebra_closure(gens, unital);
      Report r;
      r.check = "algebra_dim";
      r.pass = true;
      r.dim = alg.dim();
      r.details["n"] = alg.n;
      r.details["unital"] = unital;
      r.details["words"] = words_json(alg);
      o.emit(r);
    } else if (tri_cmd->parsed()) {
      const auto gens = load_family(files);
      o.emit(is_triangularizable(gens));
    } else if (frob_cmd->parsed()) {
      const Mat s = load_matrix(file);
      require_square(s, file.c_str());
      const FrobeniusForm f = frobenius_form(s);
      Report r;
      r.check = "frobenius";
      r.pass = true;
      r.details["permutation"] = permutation_to_json(f.permutation);
      r.details["block_sizes"] = f.block_sizes;
      r.details["permuted"] = matrix_to_json(f.permuted);
      o.emit(r);
    } else if (cone_cmd->parsed()) {
      if (file.empty()) throw InputError("supercone: a matrix file is required");
      const Mat a = load_matrix(file);
      const ConeSpec spec = supercomm_spec(a, side == "left" ? Side::left : Side::right);
      const ConeSpan span = cone_span(spec, exec);
      const Report alg = verify_lin_eq_alg(span);
      Report r;
      if (spec.side == Side::left) {
        r = supercomm_dimension_table(a, span);
      } else {
        r.check = "supercomm_dimension";
        r.dim = span.dim;
      }
      r.details["side"] = side;
      r.details["lin_eq_alg"] = alg.pass;
      r.details.update(to_json(span));
      r.pass = (spec.side == Side::right || r.pass) && alg.pass;
      if (!alg.pass) r.witness = alg.witness;
      o.emit(r);
    } else if (idem_cmd->parsed()) {
      const Mat e = load_matrix(file_e);
      const Mat f = load_matrix(file_f);
      if (what == "key") {
        o.emit(check_key_identity(e, f));
      } else {
        const IdempotentPair pair = validate_pair(e, f);
        if (what == "nine") o.emit(nine_word_span(pair));
        if (what == "band") o.emit(band_semigroup(pair));
        if (what == "two-idem") o.emit(check_two_idem(pair));
      }
    } else if (band_cmd->parsed()) {
      const Mat e = load_matrix(file);
      const BandSplit split = band_split(e);
      const auto violations = band_identity_violations(e, split);
      Report r;
      r.check = "band_split";
      r.pass = violations.empty();
      if (!violations.empty()) r.witness = violations.front();
      r.details = to_json(split);
      o.emit(r);
    } else if (ex_cmd->parsed()) {
      const ExamplePair ex = build_example(example);
      Json j;
      j["example"] = example;
      j["E"] = matrix_to_json(ex.e);
      j["F"] = ex.f ? matrix_to_json(*ex.f) : Json(nullptr);
      if (!prefix.empty()) {
        save_matrix(ex.e, prefix + "_E.json");
        if (ex.f) save_matrix(*ex.f, prefix + "_F.json");
      }
      o.emit(j);
    } else if (repro_cmd->parsed()) {
      const auto rows = repro_all(exec);
      std::size_t passed = 0;
      for (const auto& r : rows) passed += r.pass ? 1 : 0;
      if (pretty) {
        print_repro_table(out, rows);
      } else {
        for (const auto& r : rows) o.emit(to_json(r));
      }
      Report summary;
      summary.check = "repro";
      summary.pass = passed == rows.size();
      summary.details["rows"] = rows.size();
      summary.details["passed"] = passed;
      o.pretty = false;
      o.emit(summary);
    } else if (rc_cmd->parsed()) {
      const auto t = parse_theorem(theorem);
      if (!t) throw InputError("random-check: unknown theorem '" + theorem + "'");
      cfg.theorem = *t;
      cfg.budget = trial_budget();
      o.emit(random_check(cfg, exec));
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "json error: " << e.what() << '\n';
    return 2;
  }
  return o.all_pass ? 0 : 1;
}

}  // namespace posalg
