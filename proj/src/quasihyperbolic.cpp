#include "hkappa/quasihyperbolic.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "hkappa/errors.hpp"

namespace hkappa {

double quasihyperbolic_oracle(const ModelDomain& domain, Complex z, Complex w,
                              const Window& window, double step)
{
    if (!(step > 0.0) || !std::isfinite(step))
        throw InvalidArgument("quasihyperbolic_oracle: step must be positive");
    if (!window.contains(z) || !window.contains(w))
        throw InvalidArgument("quasihyperbolic_oracle: window does not contain both points");
    const double dz = boundary_distance(domain, z);
    const double dw = boundary_distance(domain, w);
    if (z == w)
        return 0.0;

    // Grid nodes are z + step (a, b) for integer a in [a_lo, a_hi], b in [b_lo, b_hi].
    const auto lo_index = [&](double lo, double anchor) {
        return static_cast<std::int64_t>(std::ceil((lo - anchor) / step));
    };
    const auto hi_index = [&](double hi, double anchor) {
        return static_cast<std::int64_t>(std::floor((hi - anchor) / step));
    };
    const std::int64_t a_lo = lo_index(window.lo.real(), z.real());
    const std::int64_t a_hi = hi_index(window.hi.real(), z.real());
    const std::int64_t b_lo = lo_index(window.lo.imag(), z.imag());
    const std::int64_t b_hi = hi_index(window.hi.imag(), z.imag());
    const std::int64_t nx = a_hi - a_lo + 1;
    const std::int64_t ny = b_hi - b_lo + 1;
    if (nx * ny > 50'000'000)
        throw InvalidArgument("quasihyperbolic_oracle: grid too large, increase step");

    const std::size_t nodes = static_cast<std::size_t>(nx * ny);
    const std::size_t target = nodes;  // extra node for w
    const auto position = [&](std::size_t id) {
        const auto a = static_cast<std::int64_t>(id % static_cast<std::size_t>(nx)) + a_lo;
        const auto b = static_cast<std::int64_t>(id / static_cast<std::size_t>(nx)) + b_lo;
        return z + step * Complex{static_cast<double>(a), static_cast<double>(b)};
    };

    std::vector<double> inv_d(nodes + 1, 0.0);
    for (std::size_t id = 0; id < nodes; ++id) {
        const Complex p = position(id);
        if (domain.contains(p))
            inv_d[id] = 1.0 / boundary_distance(domain, p);
    }
    inv_d[target] = 1.0 / dw;
    const std::size_t source =
        static_cast<std::size_t>((-b_lo) * nx + (-a_lo));
    inv_d[source] = 1.0 / dz;

    // Corners of the cell around w that are inside the grid and joinable.
    std::vector<std::size_t> w_links;
    {
        const double fa = std::floor((w.real() - z.real()) / step);
        const double fb = std::floor((w.imag() - z.imag()) / step);
        for (int da = 0; da <= 1; ++da) {
            for (int db = 0; db <= 1; ++db) {
                const auto a = static_cast<std::int64_t>(fa) + da;
                const auto b = static_cast<std::int64_t>(fb) + db;
                if (a < a_lo || a > a_hi || b < b_lo || b > b_hi)
                    continue;
                const auto id = static_cast<std::size_t>((b - b_lo) * nx + (a - a_lo));
                if (inv_d[id] > 0.0 && domain.contains_segment(position(id), w))
                    w_links.push_back(id);
            }
        }
    }
    if (w_links.empty())
        throw InvalidArgument("quasihyperbolic_oracle: target not reachable on this grid");

    std::vector<double> dist(nodes + 1, std::numeric_limits<double>::infinity());
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[source] = 0.0;
    queue.emplace(0.0, source);

    constexpr int kDa[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    constexpr int kDb[8] = {0, 0, 1, -1, 1, -1, 1, -1};
    const double diag = step * std::sqrt(2.0);

    while (!queue.empty()) {
        const auto [d, id] = queue.top();
        queue.pop();
        if (d > dist[id])
            continue;
        if (id == target)
            return d;
        const Complex p = position(id);
        const auto a = static_cast<std::int64_t>(id % static_cast<std::size_t>(nx));
        const auto b = static_cast<std::int64_t>(id / static_cast<std::size_t>(nx));
        const auto relax = [&, d = d, id = id](std::size_t next, double length) {
            const double cand = d + length * 0.5 * (inv_d[id] + inv_d[next]);
            if (cand < dist[next]) {
                dist[next] = cand;
                queue.emplace(cand, next);
            }
        };
        for (int k = 0; k < 8; ++k) {
            const std::int64_t na = a + kDa[k];
            const std::int64_t nb = b + kDb[k];
            if (na < 0 || na >= nx || nb < 0 || nb >= ny)
                continue;
            const auto next = static_cast<std::size_t>(nb * nx + na);
            if (inv_d[next] == 0.0)
                continue;
            if (!domain.is_convex() && !domain.contains_segment(p, position(next)))
                continue;
            relax(next, k < 4 ? step : diag);
        }
        for (std::size_t link : w_links)
            if (link == id)
                relax(target, std::abs(w - p));
    }
    throw InvalidArgument("quasihyperbolic_oracle: target not reachable inside the window");
}

}  // namespace hkappa
