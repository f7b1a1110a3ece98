#ifndef ORTHOREL_IO_HPP
#define ORTHOREL_IO_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orthorel/casebook.hpp"
#include "orthorel/functional.hpp"
#include "orthorel/poly.hpp"
#include "orthorel/relation23.hpp"

namespace orthorel {

using nlohmann::json;

/// Exact writes "p/q" strings; Float writes doubles (diagnostics only).
enum class NumberMode { Exact, Float };

json scalar_json(const Scalar& x, NumberMode mode = NumberMode::Exact);
/// Accepts rational strings and, for convenience, JSON integers.
Scalar scalar_from_json(const json& j);

json to_json(const Polynomial& p, NumberMode mode = NumberMode::Exact);
Polynomial polynomial_from_json(const json& j);

json to_json(const MomentFunctional& f, NumberMode mode = NumberMode::Exact);
MomentFunctional functional_from_json(const json& j);

json to_json(const RecurrencePair& rec, NumberMode mode = NumberMode::Exact);
RecurrencePair recurrence_from_json(const json& j);

json to_json(const Relation23& rel, NumberMode mode = NumberMode::Exact);
/// Validates lengths and the index-0/1 conventions.
Relation23 relation_from_json(const json& j);

json to_json(const FunctionalRelation& fr, NumberMode mode = NumberMode::Exact);
FunctionalRelation functional_relation_from_json(const json& j);

json to_json(const RelationCase& rc, NumberMode mode = NumberMode::Exact);
json to_json(const InverseVerdict& v, NumberMode mode = NumberMode::Exact);
json to_json(const std::vector<CaseCheck>& checks);
json to_json(const ChebyshevCaseReport& rep, NumberMode mode = NumberMode::Exact);
json to_json(const JacobiChainReport& rep, NumberMode mode = NumberMode::Exact);

json read_json_file(const std::filesystem::path& path);

/// Named columns of partial sequences rendered one row per index n; missing
/// entries become empty cells.
using CsvColumns = std::vector<std::pair<std::string, PartialSeq>>;
std::string to_csv(const CsvColumns& columns, NumberMode mode = NumberMode::Exact);

PartialSeq to_partial(const std::vector<Scalar>& v, std::size_t first = 0);
/// gamma stored from index 1.
PartialSeq gamma_partial(const RecurrencePair& rec);

/// Standard CSV layout: n,a,b,c,r,s,t,beta_tilde,gamma_tilde,A,B,C.
CsvColumns standard_columns(const PartialSeq& a, const PartialSeq& b, const PartialSeq& c, const Relation23& rel,
                            const RecurrencePair& tilde, const PartialSeq& A, const PartialSeq& B,
                            const PartialSeq& C);

}  // namespace orthorel

#endif  // ORTHOREL_IO_HPP
