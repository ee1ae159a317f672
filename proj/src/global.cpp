#include "udual/global.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "udual/expr.hpp"

namespace udual {

using nlohmann::json;

std::vector<std::string> DivisionAlgebraSpec::ramifiedPlaces() const {
    std::vector<std::string> out;
    for (const PlaceSpec& p : places)
        if (p.dv != 1) out.push_back(p.id);
    return out;
}

const PlaceSpec& DivisionAlgebraSpec::place(const std::string& id) const {
    for (const PlaceSpec& p : places)
        if (p.id == id) return p;
    throw std::invalid_argument("unknown place '" + id + "'");
}

void DivisionAlgebraSpec::validate(std::optional<int> n) const {
    if (d < 1) throw std::invalid_argument("d must be positive");
    int lcmDv = 1;
    for (const PlaceSpec& p : places) {
        if (p.dv < 1) throw std::invalid_argument("place " + p.id + ": d_v must be positive");
        if (p.kind == PlaceKind::ArchReal && p.dv > 2)
            throw std::invalid_argument("place " + p.id + ": a real place has d_v in {1,2}");
        if (p.kind == PlaceKind::ArchComplex && p.dv != 1)
            throw std::invalid_argument("place " + p.id + ": a complex place is always split");
        lcmDv = std::lcm(lcmDv, p.dv);
        if (n) {
            if ((static_cast<long>(*n) * d) % p.dv != 0)
                throw std::invalid_argument("place " + p.id + ": d_v does not divide n*d");
        }
    }
    if (lcmDv != d)
        throw std::invalid_argument("d = " + std::to_string(d) +
                                    " must be the least common multiple of the d_v (= " +
                                    std::to_string(lcmDv) + ")");
    for (size_t i = 0; i < places.size(); ++i)
        for (size_t j = i + 1; j < places.size(); ++j)
            if (places[i].id == places[j].id)
                throw std::invalid_argument("duplicate place id '" + places[i].id + "'");
}

namespace {

PlaceKind kindFromString(const std::string& s) {
    if (s == "real") return PlaceKind::ArchReal;
    if (s == "complex") return PlaceKind::ArchComplex;
    if (s == "nonarch") return PlaceKind::NonArch;
    throw std::invalid_argument("unknown place kind '" + s + "'");
}

LocalComponent componentFromJson(const json& j, const PlaceSpec& place) {
    LocalComponent c;
    std::string type = j.at("type").get<std::string>();
    if (type == "arch") {
        if (place.kind == PlaceKind::NonArch)
            throw std::invalid_argument("place " + place.id + ": concrete components belong to"
                                        " archimedean places");
        c.type = LocalComponent::Type::ArchConcrete;
        try {
            c.rep = parseUnitaryProduct(j.at("rep").get<std::string>(), /*strict=*/true);
        } catch (const ParseError& e) {
            throw std::invalid_argument("place " + place.id + ": " + e.what());
        }
        Algebra expected = place.kind == PlaceKind::ArchReal ? Algebra::Real : Algebra::Complex;
        if (c.rep.alg != expected)
            throw std::invalid_argument("place " + place.id + ": component over the wrong algebra");
        if (!isGenericUnitary(c.rep))
            throw std::invalid_argument("place " + place.id + ": a cuspidal component must be generic"
                                        " (all factor lengths 1)");
        return c;
    }
    if (type == "nonarch") {
        c.type = LocalComponent::Type::NonArchAbstract;
        c.declaredK = j.value("k", 1);
        if (j.contains("factorKs")) c.genericFactorKs = j.at("factorKs").get<std::vector<int>>();
        return c;
    }
    if (type == "unramified") {
        c.type = LocalComponent::Type::Unramified;
        c.label = j.value("label", "spherical");
        return c;
    }
    throw std::invalid_argument("unknown component type '" + type + "'");
}

}  // namespace

GlobalSetup loadGlobalSetup(const std::string& jsonText) {
    json j;
    try {
        j = json::parse(jsonText);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    GlobalSetup setup;
    setup.algebra.d = j.at("d").get<int>();
    for (const json& pj : j.at("places")) {
        PlaceSpec p;
        p.id = pj.at("id").get<std::string>();
        p.kind = kindFromString(pj.at("kind").get<std::string>());
        p.dv = pj.at("d_v").get<int>();
        setup.algebra.places.push_back(p);
    }
    std::optional<int> n;
    if (j.contains("n")) n = j.at("n").get<int>();
    setup.algebra.validate(n);
    if (j.contains("cuspidals"))
        for (const json& cj : j.at("cuspidals")) {
            CuspidalLabel rho;
            rho.id = cj.at("id").get<std::string>();
            rho.degree = cj.value("degree", 1);
            if (rho.degree < 1) throw std::invalid_argument("cuspidal " + rho.id + ": bad degree");
            if (cj.contains("components"))
                for (const auto& [placeId, compJson] : cj.at("components").items())
                    rho.components.emplace(placeId,
                                           componentFromJson(compJson, setup.algebra.place(placeId)));
            if (setup.cuspidals.count(rho.id))
                throw std::invalid_argument("duplicate cuspidal id '" + rho.id + "'");
            setup.cuspidals.emplace(rho.id, std::move(rho));
        }
    return setup;
}

namespace {

int localGenerator(const LocalComponent& c, const PlaceSpec& place) {
    switch (c.type) {
        case LocalComponent::Type::ArchConcrete: return kGamma(c.rep, place.dv);
        case LocalComponent::Type::NonArchAbstract: {
            int k = c.genericFactorKs.empty() ? c.declaredK
                                              : kGammaFromFactors(c.genericFactorKs, place.dv);
            if (k < 1 || place.dv % k != 0)
                throw std::invalid_argument("place " + place.id + ": local generator " +
                                            std::to_string(k) + " does not divide d_v");
            return k;
        }
        case LocalComponent::Type::Unramified:
            throw std::invalid_argument("place " + place.id +
                                        ": an unramified marker cannot sit at a ramified place");
    }
    throw std::logic_error("unreachable");
}

const LocalComponent& componentAt(const CuspidalLabel& rho, const PlaceSpec& place) {
    auto it = rho.components.find(place.id);
    if (it == rho.components.end())
        throw std::invalid_argument("cuspidal " + rho.id + " has no component at the ramified place " +
                                    place.id);
    return it->second;
}

}  // namespace

int kRho(const CuspidalLabel& rho, const DivisionAlgebraSpec& spec) {
    int k = 1;
    for (const PlaceSpec& p : spec.places)
        if (p.dv != 1) k = std::lcm(k, localGenerator(componentAt(rho, p), p));
    if (spec.d % k != 0) throw std::logic_error("k_rho does not divide d");
    return k;
}

bool isDCompatible(const MWDatum& pi, const DivisionAlgebraSpec& spec) {
    if (pi.k < 1) throw std::invalid_argument("MW length must be positive");
    return pi.k % kRho(pi.cusp, spec) == 0;
}

MWPrime mwPrime(const CuspidalLabel& rho, const DivisionAlgebraSpec& spec, int k) {
    if (k < 1) throw std::invalid_argument("MW' length must be positive");
    MWPrime out;
    out.rhoPrimeId = rho.id + "'";
    out.k = k;
    out.twistStep = kRho(rho, spec);
    out.image = MWDatum{rho, k * out.twistStep};
    return out;
}

GlobalRep transferGInverse(const MWDatum& pi, const DivisionAlgebraSpec& spec) {
    if (!isDCompatible(pi, spec))
        throw std::invalid_argument("MW(" + pi.cusp.id + "," + std::to_string(pi.k) +
                                    ") is not compatible with this division algebra");
    GlobalRep out;
    for (const PlaceSpec& p : spec.places) {
        auto it = pi.cusp.components.find(p.id);
        std::string rendered;
        if (it == pi.cusp.components.end()) {
            rendered = "unramified[k=" + std::to_string(pi.k) + "]";
        } else {
            const LocalComponent& c = it->second;
            switch (c.type) {
                case LocalComponent::Type::ArchConcrete: {
                    UnitaryRep local = uGamma(c.rep, pi.k);
                    if (p.dv == 1) {
                        rendered = printUnitary(local);
                    } else {
                        auto img = ljAbsUnitary(local);
                        if (!img)
                            throw std::logic_error("compatible component fails to transfer at " + p.id);
                        rendered = printUnitary(img->rep) +
                                   (img->sign < 0 ? " [sign -1]" : " [sign +1]");
                    }
                    break;
                }
                case LocalComponent::Type::NonArchAbstract:
                    rendered = (p.dv == 1 ? "abstract[k=" : "transfer[k=") + std::to_string(pi.k) +
                               ",local=" + std::to_string(localGenerator(c, p)) + "]";
                    break;
                case LocalComponent::Type::Unramified:
                    rendered = "unramified[" + c.label + ",k=" + std::to_string(pi.k) + "]";
                    break;
            }
        }
        out.components[p.id] = rendered;
    }
    return out;
}

std::string strongMultiplicityKey(const GlobalRep& rep, const std::vector<std::string>& ignore) {
    std::string key;
    for (const auto& [place, comp] : rep.components) {
        if (std::find(ignore.begin(), ignore.end(), place) != ignore.end()) continue;
        key += place + "=" + comp + ";";
    }
    return key;
}

}  // namespace udual
