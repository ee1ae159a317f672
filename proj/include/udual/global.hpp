#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udual/jl.hpp"

namespace udual {

enum class PlaceKind { ArchReal, ArchComplex, NonArch };

struct PlaceSpec {
    std::string id;
    PlaceKind kind = PlaceKind::NonArch;
    int dv = 1;
};

// a central division algebra over a number field, seen through its local
// invariants
struct DivisionAlgebraSpec {
    int d = 1;
    std::vector<PlaceSpec> places;

    std::vector<std::string> ramifiedPlaces() const;  // where d_v != 1
    const PlaceSpec& place(const std::string& id) const;
    void validate(std::optional<int> n = std::nullopt) const;
};

// a local component of a cuspidal label: concrete at archimedean places,
// opaque compatibility data at finite places, or an unramified marker
struct LocalComponent {
    enum class Type { ArchConcrete, NonArchAbstract, Unramified } type = Type::Unramified;
    UnitaryRep rep;                   // ArchConcrete
    int declaredK = 1;                // NonArchAbstract: the local generator
    std::vector<int> genericFactorKs; // NonArchAbstract: per-factor generators
    std::string label;                // Unramified
};

struct CuspidalLabel {
    std::string id;
    int degree = 1;
    std::map<std::string, LocalComponent> components;  // by place id
};

// the residual-spectrum parameter: a cuspidal label and a ladder length
struct MWDatum {
    CuspidalLabel cusp;
    int k = 1;  // cuspidal iff k = 1
};

struct GlobalRep {
    // place id -> rendered component; archimedean transfers are concrete,
    // finite transfers are tagged markers
    std::map<std::string, std::string> components;
    bool operator==(const GlobalRep& o) const { return components == o.components; }
};

struct GlobalSetup {
    DivisionAlgebraSpec algebra;
    std::map<std::string, CuspidalLabel> cuspidals;
};

// parses and eagerly validates a JSON global-setup document
GlobalSetup loadGlobalSetup(const std::string& jsonText);

// lcm over ramified places of the local generators; divides d
int kRho(const CuspidalLabel& rho, const DivisionAlgebraSpec& spec);

// MW(rho, k) transfers iff kRho | k
bool isDCompatible(const MWDatum& pi, const DivisionAlgebraSpec& spec);

struct MWPrime {
    std::string rhoPrimeId;
    int k = 1;
    int twistStep = 1;        // nu^{k_rho}
    MWDatum image;            // MW(rho, k * k_rho)
};

// the inner-form parameter over a transferred cuspidal label and its image
MWPrime mwPrime(const CuspidalLabel& rho, const DivisionAlgebraSpec& spec, int k);

// the place-indexed family of local transfers of a compatible MW datum
GlobalRep transferGInverse(const MWDatum& pi, const DivisionAlgebraSpec& spec);

// canonical serialization of all components away from the ignored places
std::string strongMultiplicityKey(const GlobalRep& rep, const std::vector<std::string>& ignore);

}  // namespace udual
