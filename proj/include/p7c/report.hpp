#ifndef P7C_REPORT_HPP
#define P7C_REPORT_HPP

// JSON views of graphs, certificates and solutions.

#include "p7c/atoms.hpp"
#include "p7c/cutset_tree.hpp"
#include "p7c/pca.hpp"
#include "p7c/patterns.hpp"
#include "p7c/types.hpp"

#include <json.hpp>

namespace p7c {

using Json = nlohmann::ordered_json;

Json to_json(const PatternWitness& w);
Json to_json(const ClassReport& r);
Json to_json(const AtomCertificate& c);
Json to_json(const DecompTree& t);
Json to_json(const ArcRepresentation& rep);
Json to_json(const Verdict& v);
Json to_json(const Coloring& c);
Json to_json(const WeightedSet& s);

// Certificate read back from to_json output; throws std::invalid_argument on malformed input.
AtomCertificate certificate_from_json(const Json& j);

}  // namespace p7c

#endif
