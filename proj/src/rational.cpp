#include "gcw/rational.hpp"

#include <sstream>

namespace gcw {

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::optional<Rat> parse_rat(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](Int& out) -> bool {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
        out = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out = out * 10 + (text[pos] - '0');
            ++pos;
        }
        return true;
    };
    Int num;
    if (!read_digits(num)) return std::nullopt;
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!read_digits(den) || den == 0) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    Rat q(num, den);
    return neg ? Rat(-q) : q;
}

std::optional<RatMatrix> invert(const RatMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return std::nullopt;

    RatMatrix a = m;
    RatMatrix inv(n, std::vector<Rat>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rat p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rat f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace gcw
