#include "orthorel/io.hpp"

#include <fstream>
#include <sstream>

#include "orthorel/errors.hpp"

namespace orthorel {

json scalar_json(const Scalar& x, NumberMode mode) {
  if (mode == NumberMode::Float) return to_double(x);
  return to_string(x);
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.dump());
  throw ParseError("expected a rational string such as \"-3/4\", got " + j.dump());
}

namespace {

json scalars_json(const std::vector<Scalar>& v, NumberMode mode) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_json(x, mode));
  return out;
}

std::vector<Scalar> scalars_from(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rational strings");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json partial_json(const PartialSeq& seq, NumberMode mode) {
  json out = json::array();
  for (const auto& x : seq) out.push_back(x ? scalar_json(*x, mode) : json(nullptr));
  return out;
}

}  // namespace

json to_json(const Polynomial& p, NumberMode mode) { return scalars_json(p.coeffs(), mode); }

Polynomial polynomial_from_json(const json& j) { return Polynomial(scalars_from(j, "polynomial")); }

json to_json(const MomentFunctional& f, NumberMode mode) { return {{"moments", scalars_json(f.moments(), mode)}}; }

MomentFunctional functional_from_json(const json& j) {
  return MomentFunctional(scalars_from(field(j, "moments"), "moments"));
}

json to_json(const RecurrencePair& rec, NumberMode mode) {
  return {{"beta", scalars_json(rec.beta, mode)}, {"gamma", scalars_json(rec.gamma, mode)}};
}

RecurrencePair recurrence_from_json(const json& j) {
  return {scalars_from(field(j, "beta"), "beta"), scalars_from(field(j, "gamma"), "gamma")};
}

json to_json(const Relation23& rel, NumberMode mode) {
  return {{"r", scalars_json(rel.r, mode)}, {"s", scalars_json(rel.s, mode)}, {"t", scalars_json(rel.t, mode)}};
}

Relation23 relation_from_json(const json& j) {
  Relation23 rel{scalars_from(field(j, "r"), "r"), scalars_from(field(j, "s"), "s"), scalars_from(field(j, "t"), "t")};
  rel.validate();
  return rel;
}

json to_json(const FunctionalRelation& fr, NumberMode mode) {
  return {{"lambda", scalar_json(fr.lambda, mode)},
          {"c", scalar_json(fr.c, mode)},
          {"a", scalar_json(fr.a, mode)},
          {"b", scalar_json(fr.b, mode)}};
}

FunctionalRelation functional_relation_from_json(const json& j) {
  return {scalar_from_json(field(j, "lambda")), scalar_from_json(field(j, "c")), scalar_from_json(field(j, "a")),
          scalar_from_json(field(j, "b"))};
}

json to_json(const RelationCase& rc, NumberMode mode) {
  json out{{"tag", std::string(to_string(rc.tag))}};
  if (!rc.a.empty()) out["a"] = partial_json(rc.a, mode);
  if (!rc.b.empty()) out["b"] = partial_json(rc.b, mode);
  if (!rc.c.empty()) out["c"] = partial_json(rc.c, mode);
  if (!rc.d.empty()) out["d"] = partial_json(rc.d, mode);
  if (rc.split_start) out["split_start"] = true;
  return out;
}

json to_json(const InverseVerdict& v, NumberMode mode) {
  json failures = json::array();
  for (const auto& f : v.failures) failures.push_back({{"condition", f.condition}, {"n", f.n}});
  json out{{"is_mops", v.is_mops}, {"depth", v.depth}, {"failures", failures}, {"tilde", to_json(v.tilde, mode)}};
  if (v.constants) {
    const auto& k = *v.constants;
    out["constants"] = {{"A", scalar_json(k[0], mode)}, {"B", scalar_json(k[1], mode)}, {"C", scalar_json(k[2], mode)}};
  } else {
    out["constants"] = nullptr;
  }
  return out;
}

json to_json(const std::vector<CaseCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json item{{"name", c.name}, {"passed", c.passed}};
    if (c.first_bad) item["n"] = *c.first_bad;
    out.push_back(item);
  }
  return out;
}

namespace {

json optional_verdict(const std::optional<InverseVerdict>& v, NumberMode mode) {
  return v ? to_json(*v, mode) : json(nullptr);
}

json optional_constants(const std::optional<FunctionalRelation>& fr, NumberMode mode) {
  return fr ? to_json(*fr, mode) : json(nullptr);
}

}  // namespace

json to_json(const ChebyshevCaseReport& rep, NumberMode mode) {
  return {{"example", "chebyshev"},
          {"depth", rep.depth},
          {"ok", rep.ok()},
          {"lambda_seq", partial_json(rep.lambda_seq, mode)},
          {"a", partial_json(rep.a_seq, mode)},
          {"b", partial_json(rep.b_seq, mode)},
          {"relation", to_json(rep.rel, mode)},
          {"p_recurrence", to_json(rep.p_rec, mode)},
          {"tag", std::string(to_string(rep.tag))},
          {"by_equations", optional_verdict(rep.by_equations, mode)},
          {"by_constancy", optional_verdict(rep.by_constancy, mode)},
          {"constants", optional_constants(rep.constants, mode)},
          {"regularity", {rep.regularity.first, rep.regularity.second}},
          {"shifted_first_vanishing",
           rep.shifted.first_vanishing ? json(*rep.shifted.first_vanishing) : json(nullptr)},
          {"checks", to_json(rep.checks.items())}};
}

json to_json(const JacobiChainReport& rep, NumberMode mode) {
  json out{{"example", "jacobi-chain"},
           {"alpha", scalar_json(rep.params.alpha, mode)},
           {"beta", scalar_json(rep.params.beta, mode)},
           {"a1", scalar_json(rep.a1, mode)},
           {"c1", scalar_json(rep.c1, mode)},
           {"depth", rep.depth},
           {"ok", rep.ok()},
           {"failure", rep.failure ? json{{"condition", rep.failure->condition}, {"n", rep.failure->n}} : json(nullptr)},
           {"a", partial_json(rep.a_seq, mode)},
           {"b", partial_json(rep.b_seq, mode)},
           {"c", partial_json(rep.c_seq, mode)},
           {"checks", to_json(rep.checks.items())}};
  if (!rep.failure) {
    out["w_tilde0"] = scalar_json(rep.w_tilde0, mode);
    out["u0"] = scalar_json(rep.u0, mode);
    out["v0"] = scalar_json(rep.v0, mode);
    out["relation"] = to_json(rep.rel, mode);
    out["tag"] = std::string(to_string(rep.tag));
    out["by_equations"] = optional_verdict(rep.by_equations, mode);
    out["by_constancy"] = optional_verdict(rep.by_constancy, mode);
    out["constants"] = optional_constants(rep.constants, mode);
    out["regularity"] = {rep.regularity.first, rep.regularity.second};
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string to_csv(const CsvColumns& columns, NumberMode mode) {
  std::size_t rows = 0;
  for (const auto& [name, seq] : columns) rows = std::max(rows, seq.size());
  std::ostringstream out;
  out << 'n';
  for (const auto& [name, seq] : columns) out << ',' << name;
  out << '\n';
  for (std::size_t n = 0; n < rows; ++n) {
    out << n;
    for (const auto& [name, seq] : columns) {
      out << ',';
      if (n < seq.size() && seq[n]) {
        if (mode == NumberMode::Float) {
          out << to_double(*seq[n]);
        } else {
          out << to_string(*seq[n]);
        }
      }
    }
    out << '\n';
  }
  return out.str();
}

PartialSeq to_partial(const std::vector<Scalar>& v, std::size_t first) {
  PartialSeq out(first + v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[first + i] = v[i];
  return out;
}

PartialSeq gamma_partial(const RecurrencePair& rec) { return to_partial(rec.gamma, 1); }

CsvColumns standard_columns(const PartialSeq& a, const PartialSeq& b, const PartialSeq& c, const Relation23& rel,
                            const RecurrencePair& tilde, const PartialSeq& A, const PartialSeq& B,
                            const PartialSeq& C) {
  return {{"a", a},
          {"b", b},
          {"c", c},
          {"r", to_partial(rel.r)},
          {"s", to_partial(rel.s)},
          {"t", to_partial(rel.t)},
          {"beta_tilde", to_partial(tilde.beta)},
          {"gamma_tilde", gamma_partial(tilde)},
          {"A", A},
          {"B", B},
          {"C", C}};
}

}  // namespace orthorel
