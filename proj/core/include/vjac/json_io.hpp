#pragma once

#include <json.hpp>

#include <map>
#include <memory>
#include <tuple>

#include "vjac/degposet.hpp"
#include "vjac/polarization.hpp"
#include "vjac/symmetry.hpp"
#include "vjac/vfunction.hpp"

namespace vjac {

using nlohmann::json;

// Malformed or schema-violating input (CLI exit code 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Owns the domains referenced by objects loaded from JSON.
class DomainCache {
  public:
    const StabilityDomain& get(int g, int n, bool extended = false);

  private:
    std::map<std::tuple<int, int, bool>, std::unique_ptr<StabilityDomain>> cache_;
};

json element_to_json(const HalfVine& x);
HalfVine element_from_json(const json& j, int n);

json domain_to_json(const StabilityDomain& d);

json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);

// {"g","n","chi","values":[{"e","h","A","sigma"}]}; input entries may come in
// any order but must cover the full domain or exactly one of its parts.
json vfunction_to_json(const VFunction& f);
VFunction vfunction_from_json(const json& j, DomainCache& cache);

// {"g","n","beta","alpha":[rat],"gamma":[{"h","A","value"}]}
json polarization_to_json(const Polarization& L);
Polarization polarization_from_json(const json& j, DomainCache& cache);

// {"g","n","indices":[int]} in canonical element order
json degset_to_json(const DegSet& D);
DegSet degset_from_json(const json& j, DomainCache& cache);

// {"g","n","beta","alpha":[int],"gamma":[{"h","A","value"}],"epsilon"}
json group_element_to_json(const GroupElement& e);
GroupElement group_element_from_json(const json& j, DomainCache& cache);

json canonical_key_to_json(const CanonicalKey& k, const StabilityDomain& d);
json signature_to_json(const RegionSignature& sig, const StabilityDomain& d);
json report_to_json(const ValidationReport& rep);
json witness_to_json(const Witness& w, const StabilityDomain& d);

// Hasse diagram (cover relations) of a list of functions under the pointwise
// order, as a DOT digraph with edges from smaller to larger.
std::string functions_dot(const std::vector<VFunction>& fs);

// One node per degeneracy subset plus the maximum; labels use the n = 1
// taxonomy where it applies.
std::string submaximal_dot(const StabilityDomain& d, const std::vector<DegSet>& subs);

std::string degset_label(const DegSet& D);

}  // namespace vjac
