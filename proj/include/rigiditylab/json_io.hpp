#pragma once

#include <string>

#include <json.hpp>

#include "rigiditylab/cone_hyperbolic.hpp"
#include "rigiditylab/gram.hpp"
#include "rigiditylab/oracle.hpp"

namespace rigiditylab {

using Json = nlohmann::json;

// Scalars: rationals as canonical "p/q" strings ("0", "5", "-3/4"),
// complex values as {"im": "p/q", "re": "p/q"}.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json scalar_to_json(const GaussianRational& z, bool complex_space);
GaussianRational scalar_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json space_to_json(const SpaceDescriptor& s);
SpaceDescriptor space_from_json(const Json& j);

// Framework files (.rfw.json): {"v", "edges", "space", "config"}.
Json framework_to_json(const Framework& f);
Framework framework_from_json(const Json& j);

Json pair_to_json(const FrameworkPair& p);
FrameworkPair pair_from_json(const Json& j);

Json gmatrix_to_json(const GMatrix& m);
GMatrix gmatrix_from_json(const Json& j);  // validates symmetry

Json verdict_to_json(const GGRVerdict& v);

// Hyperbolic frameworks: ball parameters when every stored ray is
// canonical, raw rays otherwise.
Json hyperbolic_framework_to_json(const HyperbolicFramework& f);
HyperbolicFramework hyperbolic_framework_from_json(const Json& j);
Json hyperbolic_pair_to_json(const HyperbolicPair& p);

Json parity_to_json(const ParityReport& r);
Json realization_set_to_json(const RealizationSet& rs);

// Files and canonical formatting (sorted keys, two-space indent, trailing
// newline) so identical runs emit byte-identical reports.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
std::string dump_canonical(const Json& j);

}  // namespace rigiditylab
