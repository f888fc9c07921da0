// syzkit: exact computations with determinantal varieties given by the
// maximal minors of a matrix of linear forms: 1-genericity certification,
// Betti diagrams, last-syzygy cocycles, syzygy ideals, and verification of
// the support / tangent-space statements on concrete instances.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "syzkit/json_io.hpp"
#include "syzkit/modp.hpp"
#include "syzkit/syzygy.hpp"
#include "syzkit/tensor.hpp"

using namespace syzkit;

namespace {

struct Output {
  std::optional<std::string> path;

  void write(const std::string& text) const {
    if (path) {
      std::ofstream f(*path);
      if (!f) throw std::runtime_error("cannot open output file: " + *path);
      f << text;
    } else {
      std::cout << text;
    }
  }
};

TripleTensor load_tensor(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  Json j;
  f >> j;
  return tensor_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run(int argc, char** argv) {
  if (const char* prime = std::getenv("SYZKIT_PRIME")) {
    advisory_prime() = std::stoull(prime);
    Fp::set_modulus(advisory_prime());
  }

  CLI::App app{"exact syzygy toolkit for matrices of linear forms"};
  app.require_subcommand(1);

  std::string input, output_path, format = "text";
  std::string s_text, x_text, alpha_text;
  std::uint64_t seed = 0;
  unsigned long trials = 100, budget = 1000;
  long coeff_bound = 5;

  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    if (needs_input) cmd->add_option("-i,--input", input, "tensor JSON file")->required();
    cmd->add_option("-o,--output", output_path, "output file (default stdout)");
    cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto out = [&]() {
    Output o;
    if (!output_path.empty()) o.path = output_path;
    return o;
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate a tensor");
  int gen_rows = 2, gen_cols = 3, gen_dim_c = 4;
  auto* gen_cat = gen->add_subcommand("cat", "catalecticant tensor");
  gen_cat->add_option("--rows", gen_rows)->required();
  gen_cat->add_option("--cols", gen_cols)->required();
  gen_cat->add_option("-o,--output", output_path);
  auto* gen_rand = gen->add_subcommand("random", "pseudorandom tensor");
  gen_rand->add_option("--rows", gen_rows)->required();
  gen_rand->add_option("--cols", gen_cols)->required();
  gen_rand->add_option("--dim-c", gen_dim_c)->required();
  gen_rand->add_option("--seed", seed);
  gen_rand->add_option("--coeff-bound", coeff_bound);
  gen_rand->add_option("-o,--output", output_path);

  auto* check = app.add_subcommand("check-1generic", "certify 1-genericity");
  add_common(check);

  auto* betti = app.add_subcommand("betti", "Betti diagram of the minors resolution");
  add_common(betti);

  auto* syz = app.add_subcommand("syzygy", "embed a last syzygy as a cocycle");
  add_common(syz);
  syz->add_option("-s", s_text, "syzygy coefficients, comma-separated")->required();

  auto* ideal_test = app.add_subcommand("ideal-test", "compare I(s)_b with (I_X)_b");
  add_common(ideal_test);
  ideal_test->add_option("-s", s_text)->required();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a last syzygy at a point");
  add_common(eval_cmd);
  eval_cmd->add_option("-s", s_text)->required();
  eval_cmd->add_option("-x", x_text, "point coordinates, comma-separated")->required();

  auto* rank_row = app.add_subcommand("rank-row", "rank of a generalized row");
  add_common(rank_row);
  rank_row->add_option("--alpha", alpha_text)->required();

  auto* verify = app.add_subcommand("verify", "verify a statement on this instance");
  verify->require_subcommand(1);
  auto* v_support = verify->add_subcommand("support", "off-X nonvanishing of last syzygies");
  add_common(v_support);
  v_support->add_option("--trials", trials);
  v_support->add_option("--seed", seed);
  auto* v_tangent = verify->add_subcommand("tangent", "tangent-space comparison at a smooth point");
  add_common(v_tangent);
  v_tangent->add_option("-s", s_text)->required();
  v_tangent->add_option("-x", x_text)->required();
  auto* v_ideal = verify->add_subcommand("ideal", "syzygy-ideal equality on random syzygies");
  add_common(v_ideal);
  v_ideal->add_option("--trials", trials);
  v_ideal->add_option("--seed", seed);
  auto* v_koszul = verify->add_subcommand("koszul", "oracle vs formula for the last syzygy space");
  add_common(v_koszul);
  auto* v_green = verify->add_subcommand("green", "injectivity of e_a");
  add_common(v_green);

  auto* counter = app.add_subcommand("counterexample", "construct a syzygy with support off X");
  add_common(counter);
  counter->add_option("--budget", budget);
  counter->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gen_cat->parsed()) {
    out().write(dump(tensor_to_json(catalecticant(gen_rows, gen_cols))));
    return 0;
  }
  if (gen_rand->parsed()) {
    out().write(dump(tensor_to_json(
        random_tensor(gen_rows, gen_cols, gen_dim_c, seed, coeff_bound))));
    return 0;
  }

  TripleTensor t = load_tensor(input);

  if (check->parsed()) {
    OneGenericReport r = check_1generic(t);
    Json j{{"is_1generic", r.is_1generic},
           {"failing_side", r.failing_side == FailingSide::none
                                ? "none"
                                : (r.failing_side == FailingSide::rows ? "rows" : "cols")},
           {"advisory_mod_p", r.advisory_mod_p}};
    if (r.witness) j["witness"] = rat_vector_to_json(*r.witness);
    if (format == "json") {
      out().write(dump(j));
    } else {
      std::string text = r.is_1generic ? "1-generic\n" : "not 1-generic";
      if (!r.is_1generic) {
        text += std::string(" (failing side: ") +
                (r.failing_side == FailingSide::rows ? "rows" : "cols") + ")";
        if (r.witness) {
          text += ", witness:";
          for (const Rat& q : *r.witness) text += " " + rat_to_string(q);
        }
        text += "\n";
      }
      if (r.advisory_mod_p) text += "note: advisory mod-p certificate\n";
      out().write(text);
    }
    return r.is_1generic ? 0 : 1;
  }

  if (betti->parsed()) {
    BettiTable table = en_betti(t.a(), t.b());
    if (format == "json") {
      out().write(dump(Json{{"entries", table.entries}}));
    } else {
      out().write(table.to_text());
    }
    return 0;
  }

  if (syz->parsed()) {
    SyzygyCocycle coc = embed_last_syzygy(t, parse_rat_list(s_text));
    if (format == "json") {
      out().write(dump(cocycle_to_json(coc)));
    } else {
      std::string text;
      for (const auto& [key, f] : coc.components)
        text += "{" + subset_key(key) + "} -> " + poly_to_string(f) + "\n";
      if (text.empty()) text = "0\n";
      out().write(text);
    }
    return 0;
  }

  if (ideal_test->parsed()) {
    SyzygyCocycle coc = embed_last_syzygy(t, parse_rat_list(s_text));
    GradedPiece is = syzygy_ideal(coc);
    GradedPiece ix = graded_piece(all_maximal_minors(t), t.b());
    bool equal = subspace_equal(is.subspace, ix.subspace);
    Json j{{"dim_syzygy_ideal", is.subspace.dim()},
           {"dim_ideal", ix.subspace.dim()},
           {"equal", equal}};
    if (format == "json")
      out().write(dump(j));
    else
      out().write("dim I(s)_b = " + std::to_string(is.subspace.dim()) +
                  ", dim (I_X)_b = " + std::to_string(ix.subspace.dim()) +
                  (equal ? ", equal\n" : ", different\n"));
    return equal ? 0 : 1;
  }

  if (eval_cmd->parsed()) {
    SyzygyCocycle coc = embed_last_syzygy(t, parse_rat_list(s_text));
    MultiVector v = eval_syzygy(coc, parse_rat_list(x_text));
    if (format == "json") {
      out().write(dump(multivector_to_json(v)));
    } else {
      std::string text;
      for (const auto& [key, c] : v.coords)
        text += "e{" + subset_key(key) + "}: " + rat_to_string(c) + "\n";
      if (text.empty()) text = "0\n";
      out().write(text);
    }
    return 0;
  }

  if (rank_row->parsed()) {
    std::size_t r = row_rank(t, parse_rat_list(alpha_text));
    if (format == "json")
      out().write(dump(Json{{"rank", r}}));
    else
      out().write("rank " + std::to_string(r) + "\n");
    return 0;
  }

  if (v_support->parsed()) {
    SupportReport r = support_test(t, trials, seed);
    Json j{{"off_x_nonzero", r.off_x_nonzero},
           {"off_x_zero", r.off_x_zero},
           {"on_x_zero", r.on_x_zero},
           {"on_x_nonzero", r.on_x_nonzero},
           {"verdict", r.verdict ? "pass" : "fail"}};
    if (format == "json")
      out().write(dump(j));
    else
      out().write("off-X nonzero: " + std::to_string(r.off_x_nonzero) +
                  ", off-X zero: " + std::to_string(r.off_x_zero) +
                  ", on-X zero: " + std::to_string(r.on_x_zero) +
                  ", verdict: " + (r.verdict ? "pass" : "fail") + "\n");
    return r.verdict ? 0 : 1;
  }

  if (v_tangent->parsed()) {
    TangentReport r = tangent_test(t, parse_rat_list(s_text), parse_rat_list(x_text));
    Json j{{"x_smooth_on_X", r.x_smooth_on_x}, {"compared", r.compared}};
    if (r.compared) {
      j["dim_TX"] = r.dim_tx;
      j["dim_TSyz"] = r.dim_tsyz;
      j["equal"] = r.equal;
    }
    if (format == "json") {
      out().write(dump(j));
    } else if (!r.x_smooth_on_x) {
      out().write("x is a singular point of X; comparison skipped\n");
    } else {
      out().write("dim " + std::to_string(r.dim_tx) + " = dim " +
                  std::to_string(r.dim_tsyz) +
                  (r.equal ? ", equal\n" : ", different\n"));
    }
    return r.compared && r.equal ? 0 : 1;
  }

  if (v_ideal->parsed()) {
    OneGenericReport gen_report = check_1generic(t);
    if (!gen_report.is_1generic)
      throw PreconditionError("verify ideal: input tensor is not 1-generic");
    GradedPiece ix = graded_piece(all_maximal_minors(t), t.b());
    SyzygyEmbedder embedder(t);
    SmallRng rng(seed);
    unsigned long equal_count = 0;
    for (unsigned long i = 0; i < trials; ++i) {
      LastSyzygy s = random_last_syzygy(t.a(), t.b(), rng);
      GradedPiece is = syzygy_ideal(embedder.embed(s));
      if (subspace_equal(is.subspace, ix.subspace)) ++equal_count;
    }
    bool all_equal = equal_count == trials;
    std::string status = t.b() >= 3
                             ? std::string("experimental evidence for the conjecture")
                             : std::string("verified (proven case b <= 2)");
    Json j{{"trials", trials}, {"equal", equal_count}, {"status", status},
           {"all_equal", all_equal}};
    if (format == "json")
      out().write(dump(j));
    else
      out().write(std::to_string(equal_count) + "/" + std::to_string(trials) +
                  " random syzygies have I(s)_b = (I_X)_b; " + status + "\n");
    return all_equal ? 0 : 1;
  }

  if (v_koszul->parsed()) {
    LastSyzygyOracle oracle = last_syzygy_space_oracle(t);
    unsigned long formula = binomial(t.a() - 1, t.b() - 1);
    SyzygyEmbedder embedder(t);
    std::vector<std::vector<Rat>> images;
    for (std::size_t i = 0; i < embedder.syzygy_length(); ++i) {
      LastSyzygy s(embedder.syzygy_length(), Rat(0));
      s[i] = 1;
      images.push_back(cocycle_coordinates(embedder.embed(s), oracle));
    }
    Subspace span = Subspace::span_of_vectors(images, oracle.kernel.ambient_dim());
    bool dims_match = oracle.kernel.dim() == formula;
    bool span_match = subspace_equal(span, oracle.kernel);
    Json j{{"oracle_dim", oracle.kernel.dim()},
           {"formula_dim", formula},
           {"dims_match", dims_match},
           {"span_equals_kernel", span_match}};
    if (format == "json")
      out().write(dump(j));
    else
      out().write("oracle dim " + std::to_string(oracle.kernel.dim()) +
                  ", formula dim " + std::to_string(formula) +
                  (dims_match && span_match ? ", match\n" : ", MISMATCH\n"));
    return dims_match && span_match ? 0 : 1;
  }

  if (v_green->parsed()) {
    if (t.a() > t.c()) {
      Json j{{"injective", false}, {"reason", "a > c: Lambda^a C too small"}};
      if (format == "json")
        out().write(dump(j));
      else
        out().write("e_a not injective: a > c\n");
      return 1;
    }
    bool inj = green_injectivity(t);
    Json j{{"injective", inj}};
    if (format == "json")
      out().write(dump(j));
    else
      out().write(inj ? "e_a injective\n" : "e_a not injective\n");
    return inj ? 0 : 1;
  }

  if (counter->parsed()) {
    CounterexampleResult r = counterexample(t, budget, seed);
    Json j{{"found", r.found}};
    if (r.found) {
      j["s"] = syzygy_to_json(r.s);
      j["basis_change"] = Json{{"rows", matrix_to_json(r.row_change)},
                               {"cols", matrix_to_json(r.col_change)}};
      j["x"] = rat_vector_to_json(r.x);
      j["certificate"] = Json{{"eval_zero", r.eval_zero}, {"x_off_X", r.x_off_x}};
    } else {
      j["message"] = r.message;
    }
    out().write(dump(j));
    return r.found ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
