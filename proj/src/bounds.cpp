#include "graceful/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace graceful {

int lb_max_degree(const Graph& g) { return g.max_degree() + 1; }

std::optional<int> lb_regular(const Graph& g) {
    auto r = g.regular_degree();
    if (r && *r >= 2) return *r + 2;
    return std::nullopt;
}

int lower_bound(const Graph& g) {
    // palette floor: the definition fixes k >= 2 even for edgeless graphs
    int lb = std::max(2, lb_max_degree(g));
    if (auto r = lb_regular(g)) lb = std::max(lb, *r);
    return lb;
}

std::optional<KnownValue> known_chi_g(const FamilySpec& spec) {
    const int n = spec.n;
    auto value = [&](int chi, std::string source) -> std::optional<KnownValue> {
        return KnownValue{spec, chi, std::move(source)};
    };
    switch (spec.family) {
        case Family::Path:
            if (n >= 5) return value(5, "path, n >= 5");
            return std::nullopt;
        case Family::Cycle:
            if (n == 5) return value(5, "cycle, n = 5");
            if (n >= 3) return value(4, "cycle, n != 5");
            return std::nullopt;
        case Family::ClosedLadder:
            if (n == 2) return value(4, "closed ladder, n = 2 (= C4)");
            if (n >= 3) return value(5, "closed ladder, n >= 3");
            return std::nullopt;
        case Family::OpenLadder:
            if (n >= 4) return value(5, "open ladder, n >= 4");
            return std::nullopt;
        case Family::SlantingLadder:
            if (n >= 4) return value(5, "slanting ladder, n >= 4");
            return std::nullopt;
        case Family::TriangularLadder:
            if (n == 3 || n == 4) return value(6, "triangular ladder, n in {3,4}");
            if (n >= 5) return value(7, "triangular ladder, n >= 5");
            return std::nullopt;
        case Family::OpenTriangularLadder:
            if (n >= 5) return value(7, "open triangular ladder, n >= 5");
            return std::nullopt;
        case Family::DiagonalLadder:
            if (n == 5 || n == 6) return value(8, "diagonal ladder, n in {5,6}");
            if (n >= 7) return value(9, "diagonal ladder, n >= 7");
            return std::nullopt;
        case Family::OpenDiagonalLadder:
            if (n >= 7) return value(9, "open diagonal ladder, n >= 7");
            return std::nullopt;
        case Family::CircularLadder:
            if (n >= 4)
                return n % 4 == 0 ? value(5, "circular ladder, n = 0 mod 4")
                                  : value(6, "circular ladder, n != 0 mod 4");
            return std::nullopt;
    }
    return std::nullopt;
}

std::vector<int> extreme_color_set(int k, int degree) {
    const int i = k - degree;
    if (i < 1)
        throw std::invalid_argument("no graceful " + std::to_string(k) +
                                    "-coloring admits a vertex of degree " +
                                    std::to_string(degree));
    std::vector<int> colors;
    for (int c = 1; c <= k; ++c)
        if (c <= i || c > k - i) colors.push_back(c);
    return colors;
}

std::uint64_t extreme_color_mask(int k, int degree) {
    if (k > 62) throw std::invalid_argument("mask form supports k <= 62");
    std::uint64_t mask = 0;
    for (int c : extreme_color_set(k, degree)) mask |= std::uint64_t{1} << (c - 1);
    return mask;
}

}  // namespace graceful
