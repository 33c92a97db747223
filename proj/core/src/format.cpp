#include "typrank/format.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "typrank/error.hpp"

namespace typrank {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::DegenerateSystem: return "DegenerateSystem";
    case ErrorKind::DegeneratePosition: return "DegeneratePosition";
    case ErrorKind::DegenerateSurface: return "DegenerateSurface";
    case ErrorKind::AmbiguousRoots: return "AmbiguousRoots";
    case ErrorKind::AmbiguousSystem: return "AmbiguousSystem";
    case ErrorKind::TrialAmbiguous: return "TrialAmbiguous";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    }
    return "Unknown";
}

std::string_view to_string(Regime regime) {
    switch (regime) {
    case Regime::SubBoundary: return "subboundary";
    case Regime::Boundary: return "boundary";
    case Regime::Mid: return "mid";
    case Regime::Tall: return "tall";
    case Regime::Full: return "full";
    }
    return "unknown";
}

Regime classify_regime(int m, int n, int l) {
    const int boundary = (m - 1) * (n - 1) + 1;
    if (l < boundary) return Regime::SubBoundary;
    if (l == boundary) return Regime::Boundary;
    if (l <= (m - 1) * n) return Regime::Mid;
    if (l < m * n) return Regime::Tall;
    return Regime::Full;
}

Format::Format(int m, int n, int l) : m_(m), n_(n), l_(l), regime_(Regime::Full) {
    if (m < 2 || m > n || n > l)
        throw Error(ErrorKind::InvalidArgument,
                    "format must satisfy 2 <= m <= n <= l, got " + std::to_string(m) + "x" +
                        std::to_string(n) + "x" + std::to_string(l));
    if (l > 1'000'000) throw Error(ErrorKind::OutOfRange, "tensor length too large");
    regime_ = classify_regime(m, n, l);
}

Format Format::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = pos;
        while (next < text.size() && text[next] != 'x' && text[next] != 'X') ++next;
        const std::string_view token = text.substr(pos, next - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(ErrorKind::InvalidArgument,
                        "cannot parse format '" + std::string(text) + "', expected MxNxL");
        parts.push_back(value);
        pos = next + 1;
    }
    if (parts.size() != 3)
        throw Error(ErrorKind::InvalidArgument,
                    "cannot parse format '" + std::string(text) + "', expected MxNxL");
    return Format(parts[0], parts[1], parts[2]);
}

std::string Format::to_string() const {
    return std::to_string(m_) + "x" + std::to_string(n_) + "x" + std::to_string(l_);
}

} // namespace typrank
