// orthorel: command-line front end for 2-3 structure relations.
//
// Exit codes: 0 pass, 1 negative result, 2 input error, 3 checkers disagree.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orthorel/casebook.hpp"
#include "orthorel/errors.hpp"
#include "orthorel/families.hpp"
#include "orthorel/io.hpp"
#include "orthorel/relation23.hpp"

namespace {

using namespace orthorel;

enum Exit { kPass = 0, kNegative = 1, kInput = 2, kInternal = 3 };

struct RunConfig {
  std::size_t depth = 20;
  std::string format = "json";
  std::string mode = "exact";
  std::string out;

  [[nodiscard]] NumberMode number_mode() const { return mode == "float" ? NumberMode::Float : NumberMode::Exact; }
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// The payload never carries a timestamp; with --out it goes to PATH.meta.json.
void emit(const RunConfig& cfg, const std::string& command, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream(cfg.out) << payload;
  const json meta{{"command", command}, {"generated_at", utc_timestamp()}, {"tool", "orthorel"},
                  {"version", "0.1.0"}, {"format", cfg.format}, {"mode", cfg.mode}, {"depth", cfg.depth}};
  std::ofstream(cfg.out + ".meta.json") << meta.dump(2) << '\n';
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

void require_inverse_depth(const RunConfig& cfg) {
  if (cfg.depth < 5) throw DomainError("inverse-problem commands need --depth >= 5");
}

int cmd_classify(const RunConfig& cfg, const std::string& rel_path) {
  const Relation23 rel = relation_from_json(read_json_file(rel_path));
  const RelationCase rc = classify(rel);
  if (cfg.format == "csv") {
    emit(cfg, "classify", "tag," + std::string(to_string(rc.tag)) + "\n" +
                              to_csv({{"a", rc.a}, {"b", rc.b}, {"c", rc.c}, {"d", rc.d}}, cfg.number_mode()));
  } else {
    emit(cfg, "classify", render(to_json(rc, cfg.number_mode())));
  }
  return kPass;
}

struct Loaded {
  RecurrencePair rec;
  Relation23 rel;
};

Loaded load_pair(const RunConfig& cfg, const std::string& rec_path, const std::string& rel_path) {
  require_inverse_depth(cfg);
  Loaded in{recurrence_from_json(read_json_file(rec_path)), relation_from_json(read_json_file(rel_path))};
  const RelationCase rc = classify(in.rel);
  if (rc.tag != CaseTag::NonDegenerate23) {
    throw ContractError("relation classifies as " + std::string(to_string(rc.tag)) +
                        "; inverse checks need NonDegenerate23 (see `orthorel classify`)");
  }
  return in;
}

int cmd_inverse_check(const RunConfig& cfg, const std::string& rec_path, const std::string& rel_path) {
  const Loaded in = load_pair(cfg, rec_path, rel_path);
  const InverseVerdict v31 = check_by_equations(in.rec, in.rel, cfg.depth);
  const InverseVerdict v32 = check_by_constancy(in.rec, in.rel, cfg.depth);
  std::optional<FunctionalRelation> fr;
  if (v31.is_mops) fr = relation_constants(in.rec, v31.tilde, in.rel);

  const NumberMode mode = cfg.number_mode();
  if (cfg.format == "csv") {
    const AbcdSequences q = abcd_sequences(in.rec, v31.tilde, in.rel);
    emit(cfg, "inverse-check",
         to_csv(standard_columns(q.a, q.b, q.c, in.rel, v31.tilde, v32.A, v32.B, v32.C), mode));
  } else {
    emit(cfg, "inverse-check",
         render({{"agree", v31.is_mops == v32.is_mops},
                 {"by_equations", to_json(v31, mode)},
                 {"by_constancy", to_json(v32, mode)},
                 {"functional_relation", fr ? to_json(*fr, mode) : json(nullptr)}}));
  }
  if (v31.is_mops != v32.is_mops) {
    std::cerr << "internal inconsistency: the two characterizations disagree\n";
    return kInternal;
  }
  if (!v31.is_mops) {
    const Failure& f = v31.failures.front();
    std::cerr << "not a MOPS: condition " << f.condition << " fails at n=" << f.n << '\n';
    return kNegative;
  }
  return kPass;
}

int cmd_constants(const RunConfig& cfg, const std::string& rec_path, const std::string& rel_path) {
  const Loaded in = load_pair(cfg, rec_path, rel_path);
  const RecurrencePair tilde = candidate_tilde(in.rec, in.rel);
  FunctionalRelation fr;
  try {
    fr = relation_constants(in.rec, tilde, in.rel);
  } catch (const DomainError& e) {
    std::cerr << "constants undefined: " << e.what() << '\n';
    return kNegative;
  }
  const NumberMode mode = cfg.number_mode();
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "lambda,c,a,b\n"
       << scalar_json(fr.lambda, mode).dump() << ',' << scalar_json(fr.c, mode).dump() << ','
       << scalar_json(fr.a, mode).dump() << ',' << scalar_json(fr.b, mode).dump() << '\n';
    std::string text = os.str();
    std::erase(text, '"');
    emit(cfg, "constants", text);
  } else {
    emit(cfg, "constants", render(to_json(fr, mode)));
  }
  return kPass;
}

int cmd_example(const RunConfig& cfg, const std::string& name, const std::string& alpha, const std::string& beta,
                const std::string& a1, const std::string& c1) {
  require_inverse_depth(cfg);
  const NumberMode mode = cfg.number_mode();
  if (name == "chebyshev") {
    const ChebyshevCaseReport rep = chebyshev_case(cfg.depth);
    if (cfg.format == "csv") {
      const RecurrencePair tilde = rep.by_equations ? rep.by_equations->tilde : RecurrencePair{};
      const PartialSeq none;
      emit(cfg, "example chebyshev",
           to_csv(standard_columns(rep.a_seq, rep.b_seq, none, rep.rel, tilde, rep.by_constancy ? rep.by_constancy->A : none,
                                   rep.by_constancy ? rep.by_constancy->B : none, rep.by_constancy ? rep.by_constancy->C : none),
                  mode));
    } else {
      emit(cfg, "example chebyshev", render(to_json(rep, mode)));
    }
    if (const CaseCheck* bad = rep.checks.first_failure()) {
      std::cerr << "identity " << bad->name << " failed\n";
      return kNegative;
    }
    return kPass;
  }
  if (name == "jacobi-chain") {
    const JacobiParams p{parse_scalar(alpha), parse_scalar(beta)};
    const JacobiChainReport rep = jacobi_chain(p, parse_scalar(a1), parse_scalar(c1), cfg.depth);
    if (cfg.format == "csv") {
      const PartialSeq none;
      const RecurrencePair tilde = rep.by_equations ? rep.by_equations->tilde : RecurrencePair{};
      emit(cfg, "example jacobi-chain",
           to_csv(standard_columns(rep.a_seq, rep.b_seq, rep.c_seq, rep.rel, tilde, rep.by_constancy ? rep.by_constancy->A : none,
                                   rep.by_constancy ? rep.by_constancy->B : none, rep.by_constancy ? rep.by_constancy->C : none),
                  mode));
    } else {
      json j = to_json(rep, mode);
      if (mode == NumberMode::Float) {
        // Diagnostic cross-check of the exact norms against the Gamma closed form.
        double worst = 0;
        for (std::size_t n = 0; n <= cfg.depth; ++n) worst = std::max(worst, jacobi_norm_ratio_discrepancy(p, n));
        j["norm_ratio_max_rel_error"] = worst;
        j["norm_ratio_within_1e-10"] = worst <= 1e-10;
      }
      emit(cfg, "example jacobi-chain", render(j));
    }
    if (rep.failure) {
      std::cerr << rep.failure->condition << " (n=" << rep.failure->n << ")\n";
      return kNegative;
    }
    if (const CaseCheck* bad = rep.checks.first_failure()) {
      std::cerr << "identity " << bad->name << " failed\n";
      return kNegative;
    }
    return kPass;
  }
  throw DomainError("unknown example '" + name + "' (expected chebyshev or jacobi-chain)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with 2-3 structure relations between orthogonal polynomial sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--depth", cfg.depth, "Highest index certified")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--mode", cfg.mode, "exact: rational strings; float: doubles (diagnostics)")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write the report here (metadata goes to PATH.meta.json)");

  std::string rel_path, rec_path, example, alpha = "1/2", beta = "1/2", a1 = "2", c1 = "-2";

  auto* classify_cmd = app.add_subcommand("classify", "Classify a relation {r,s,t}");
  classify_cmd->add_option("relation", rel_path, "Relation JSON file")->required();

  auto* inverse_cmd = app.add_subcommand("inverse-check", "Decide whether Q is a MOPS, both ways");
  inverse_cmd->add_option("recurrence", rec_path, "Recurrence JSON {beta,gamma} of P")->required();
  inverse_cmd->add_option("relation", rel_path, "Relation JSON file")->required();

  auto* constants_cmd = app.add_subcommand("constants", "Closed-form (lambda, c, a, b)");
  constants_cmd->add_option("recurrence", rec_path, "Recurrence JSON {beta,gamma} of P")->required();
  constants_cmd->add_option("relation", rel_path, "Relation JSON file")->required();

  auto* example_cmd = app.add_subcommand("example", "Reproduce a worked example");
  example_cmd->add_option("name", example, "chebyshev | jacobi-chain")->required();
  example_cmd->add_option("--alpha", alpha)->capture_default_str();
  example_cmd->add_option("--beta", beta)->capture_default_str();
  example_cmd->add_option("--a1", a1)->capture_default_str();
  example_cmd->add_option("--c1", c1)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg, rel_path);
    if (*inverse_cmd) return cmd_inverse_check(cfg, rec_path, rel_path);
    if (*constants_cmd) return cmd_constants(cfg, rec_path, rel_path);
    if (*example_cmd) return cmd_example(cfg, example, alpha, beta, a1, c1);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
