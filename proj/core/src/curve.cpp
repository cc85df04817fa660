#include "cliffordix/curve.hpp"

namespace cliffordix {

std::string family_name(Family f) {
    switch (f) {
    case Family::General: return "general";
    case Family::Hyperelliptic: return "hyperelliptic";
    case Family::Trigonal: return "trigonal";
    case Family::GeneralKGonal: return "kgonal";
    case Family::Bielliptic: return "bielliptic";
    case Family::SmoothPlane: return "plane";
    case Family::GeneralNodalPlane: return "nodalplane";
    case Family::Custom: return "custom";
    }
    return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::General, Family::Hyperelliptic, Family::Trigonal,
                     Family::GeneralKGonal, Family::Bielliptic, Family::SmoothPlane,
                     Family::GeneralNodalPlane, Family::Custom}) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

CurveSpec CurveSpec::general(Int g) {
    CurveSpec s;
    s.family = Family::General;
    s.g = g;
    validate_spec(s);
    return s;
}

CurveSpec CurveSpec::hyperelliptic(Int g) {
    CurveSpec s;
    s.family = Family::Hyperelliptic;
    s.g = g;
    validate_spec(s);
    return s;
}

CurveSpec CurveSpec::trigonal(Int g) {
    CurveSpec s;
    s.family = Family::Trigonal;
    s.g = g;
    validate_spec(s);
    return s;
}

CurveSpec CurveSpec::k_gonal(Int g, Int k) {
    CurveSpec s;
    s.family = Family::GeneralKGonal;
    s.g = g;
    s.k = k;
    validate_spec(s);
    return s;
}

CurveSpec CurveSpec::bielliptic(Int g) {
    CurveSpec s;
    s.family = Family::Bielliptic;
    s.g = g;
    validate_spec(s);
    return s;
}

CurveSpec CurveSpec::smooth_plane(Int delta) {
    CurveSpec s;
    s.family = Family::SmoothPlane;
    s.delta = delta;
    validate_spec(s);
    return s;
}

CurveSpec CurveSpec::nodal_plane(Int delta, Int nu) {
    CurveSpec s;
    s.family = Family::GeneralNodalPlane;
    s.delta = delta;
    s.nu = nu;
    validate_spec(s);
    return s;
}

CurveSpec CurveSpec::custom(Int g, std::optional<Int> gamma1,
                            std::vector<CurveAssertion> assertions) {
    CurveSpec s;
    s.family = Family::Custom;
    s.g = g;
    s.stated_gamma1 = gamma1;
    s.assertions = std::move(assertions);
    validate_spec(s);
    return s;
}

std::string CurveSpec::describe() const {
    std::string out = family_name(family) + "(";
    switch (family) {
    case Family::SmoothPlane: out += "delta=" + std::to_string(delta); break;
    case Family::GeneralNodalPlane:
        out += "delta=" + std::to_string(delta) + ",nu=" + std::to_string(nu);
        break;
    case Family::GeneralKGonal:
        out += "g=" + std::to_string(g) + ",k=" + std::to_string(k);
        break;
    default: out += "g=" + std::to_string(g); break;
    }
    return out + ")";
}

Int genus_of(const CurveSpec& spec) {
    switch (spec.family) {
    case Family::SmoothPlane:
        return (spec.delta - 1) * (spec.delta - 2) / 2;
    case Family::GeneralNodalPlane:
        return (spec.delta - 1) * (spec.delta - 2) / 2 - spec.nu;
    default:
        return spec.g;
    }
}

void validate_spec(const CurveSpec& spec) {
    switch (spec.family) {
    case Family::SmoothPlane:
        if (spec.delta < 5)
            throw DomainError("smooth plane curve requires delta >= 5");
        break;
    case Family::GeneralNodalPlane: {
        if (spec.delta < 7)
            throw DomainError("general nodal plane curve requires delta >= 7");
        if (spec.nu < 0)
            throw DomainError("node count must be non-negative");
        Int max_nu = (spec.delta * spec.delta - 7 * spec.delta + 14) / 2;
        if (spec.nu > max_nu)
            throw DomainError("general nodal plane curve requires nu <= (delta^2 - 7 delta + 14)/2");
        break;
    }
    case Family::GeneralKGonal:
        if (spec.k < 4)
            throw DomainError("general k-gonal curve requires k >= 4");
        break;
    case Family::Bielliptic:
        if (spec.g < 5)
            throw DomainError("bielliptic curve requires genus >= 5");
        break;
    case Family::Custom: {
        Int prev_r = 0;
        Int prev_d = 0;
        for (const auto& a : spec.assertions) {
            if (a.r < 1) throw DomainError("asserted index r must be >= 1");
            if (a.r <= prev_r || (prev_r > 0 && a.d <= prev_d))
                throw DomainError("asserted d_r values must be strictly increasing in r");
            prev_r = a.r;
            prev_d = a.d;
        }
        if (spec.stated_gamma1 && *spec.stated_gamma1 < 0)
            throw DomainError("gamma_1 must be non-negative");
        break;
    }
    default:
        break;
    }
    if (genus_of(spec) < 4)
        throw DomainError("curves must have genus >= 4");
}

} // namespace cliffordix
