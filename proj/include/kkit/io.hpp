#ifndef KKIT_IO_HPP
#define KKIT_IO_HPP

#include <string>

#include "json.hpp"
#include "kkit/alternation.hpp"
#include "kkit/hypergraph.hpp"
#include "kkit/kneser.hpp"
#include "kkit/matchcolor.hpp"
#include "kkit/ramsey.hpp"
#include "kkit/tucker.hpp"

// JSON interchange formats. Parsers throw std::invalid_argument naming the
// offending field.
namespace kkit::io {

using json = nlohmann::json;

json read_json_file(const std::string& path);

// {"n": 5, "edges": [[1,2],[3,4]]}
json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

// {"p": 3, "x": [2,0,2,1,0,3]}
json to_json(const SignedVector& x);
SignedVector signed_vector_from_json(const json& j);

// {"r": 2, "default": 1, "table": {"3": 0}}
json to_json(const ColorFrequencyMap& tau);
ColorFrequencyMap tau_from_json(const json& j);

// {"colors": [1,2,2,...]} aligned with the canonical edge order of `target`.
json to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const json& j, const Hypergraph& target);

// [{"vertex": i, "edge": [...]}, ...]
json correspondence_table(const KneserHypergraph& kg);

// {"n":4,"p":2,"m":4,"gamma":[...],"entries":[{"x":[...],"l1":1,"l2":2},...]}
json to_json(const LambdaMap& lambda);
LambdaMap lambda_from_json(const json& j);

json to_json(const HypothesisReport& report);
json to_json(const RamseyInstance& instance);
json to_json(const RamseySearchReport& report);
json to_json(const Partition& partition);
json to_json(const VertexOrdering& sigma);
json to_json(const ExtendedNat& v);

}  // namespace kkit::io

#endif  // KKIT_IO_HPP
