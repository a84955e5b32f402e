#include "arcmodel/arc.hpp"

namespace arcmodel {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::NonAdmissible: return "NonAdmissible";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::NoExtension: return "NoExtension";
    case ErrorKind::InvalidWindow: return "InvalidWindow";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::UnsupportedFamilies: return "UnsupportedFamilies";
    case ErrorKind::IncompatibleArc: return "IncompatibleArc";
    case ErrorKind::NonAdmissibleImage: return "NonAdmissibleImage";
    case ErrorKind::DNotInFrame: return "DNotInFrame";
    case ErrorKind::DNotInCore: return "DNotInCore";
    case ErrorKind::UnsupportedFamilyGeometry: return "UnsupportedFamilyGeometry";
    case ErrorKind::TriangleMismatch: return "TriangleMismatch";
    case ErrorKind::PairCheckFailed: return "PairCheckFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

std::string to_string(const Arc& a)
{
    return "(" + std::to_string(a.t()) + "," + std::to_string(a.u()) + ")";
}

Arc normalize(int t, int u)
{
    return Arc(t, u);
}

bool is_admissible(const Arc& a, const ModelParams& p) noexcept
{
    const int len = a.length();
    return len >= 2 && floor_mod(len - 1, p.n()) == 0;
}

void require_admissible(const Arc& a, const ModelParams& p)
{
    if (!is_admissible(a, p))
        throw ArcError(ErrorKind::NonAdmissible,
                       to_string(a) + " is not " + std::to_string(p.n()) + "-admissible");
}

Arc shift(const Arc& a, int k) noexcept
{
    return Arc(a.t() - k, a.u() - k);
}

Arc serre(const Arc& a, const ModelParams& p) noexcept
{
    return shift(a, p.n() + 1);
}

Arc tau(const Arc& a, const ModelParams& p) noexcept
{
    return shift(a, p.n());
}

ComponentIndex component(const Arc& a, const ModelParams& p)
{
    require_admissible(a, p);
    return {floor_mod(a.u(), p.n())};
}

bool cross(const Arc& a, const Arc& b) noexcept
{
    return (a.t() < b.t() && b.t() < a.u() && a.u() < b.u())
        || (b.t() < a.t() && a.t() < b.u() && b.u() < a.u());
}

} // namespace arcmodel
