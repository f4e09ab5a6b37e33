#include "gridsalvage/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "gridsalvage/oracle.hpp"
#include "gridsalvage/runtime.hpp"

namespace gridsalvage::hypercube {

namespace {

// C(n, k), saturating instead of overflowing.
std::uint64_t binom_sat(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(result);
}

bool sperner_applicable(int d, std::uint64_t m) {
    const std::uint64_t central =
        m > static_cast<std::uint64_t>(std::numeric_limits<int>::max())
            ? std::numeric_limits<std::uint64_t>::max()
            : binom_sat(static_cast<int>(m), static_cast<int>(m / 2));
    // d > C(m, floor(m/2)) / 2, compared without the halving division
    return 2 * static_cast<unsigned __int128>(d) > static_cast<unsigned __int128>(central);
}

// m <= log log N, i.e. 2^m <= d.
bool tiny_damage(int d, std::uint64_t m) {
    return m < 64 && (std::uint64_t{1} << m) <= static_cast<std::uint64_t>(d);
}

// Largest q >= 1 with 2^(2^q) < q N / (2m); q = 1 when no value qualifies.
int choose_q(int d, std::uint64_t m) {
    const std::uint64_t big_n = std::uint64_t{1} << d;
    int q = 1;
    for (int cand = 1; cand <= 6; ++cand) {
        const unsigned __int128 lhs = static_cast<unsigned __int128>(1) << (1 << cand);
        const unsigned __int128 rhs = static_cast<unsigned __int128>(cand) * big_n;
        if (lhs * (2 * static_cast<unsigned __int128>(m)) < rhs) q = cand;
    }
    return q;
}

// Smallest power of two p with p * q > m.
std::uint64_t prefix_subcube_count(std::uint64_t m, std::uint64_t q) {
    std::uint64_t p = 1;
    while (p * q <= m) p <<= 1;
    return p;
}

int log2_exact(std::uint64_t power_of_two) {
    return std::countr_zero(power_of_two);
}

// Prefix value of a vertex: the bits of axes [0, prefix_len) read with
// axis 0 most significant, so ascending values match lexicographic strings.
std::uint64_t prefix_value(std::uint64_t mask, int prefix_len) {
    std::uint64_t value = 0;
    for (int i = 0; i < prefix_len; ++i) {
        value = (value << 1) | ((mask >> i) & 1);
    }
    return value;
}

std::uint64_t prefix_bits_to_mask(std::uint64_t value, int prefix_len) {
    std::uint64_t mask = 0;
    for (int i = 0; i < prefix_len; ++i) {
        if ((value >> (prefix_len - 1 - i)) & 1) mask |= std::uint64_t{1} << i;
    }
    return mask;
}

Coord mask_to_coord(std::uint64_t mask, int dim) {
    Coord v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) v[i] = static_cast<int>((mask >> i) & 1);
    return v;
}

}  // namespace

HypercubeDamage::HypercubeDamage(int dim, std::vector<std::uint64_t> masks)
    : dim_(dim), masks_(std::move(masks)) {
    if (dim < 1 || dim > 63) throw InvalidInputError("hypercube dimension must lie in [1, 63]");
    set_.reserve(masks_.size() * 2);
    for (std::uint64_t mask : masks_) {
        if (dim < 64 && (mask >> dim) != 0) {
            throw InvalidInputError("damaged vertex outside the hypercube");
        }
        if (!set_.insert(mask).second) {
            throw InvalidInputError("duplicate damaged vertex " + bit_string(mask));
        }
    }
    std::sort(masks_.begin(), masks_.end());
}

std::string HypercubeDamage::bit_string(std::uint64_t mask) const {
    std::string s(static_cast<std::size_t>(dim_), '0');
    for (int i = 0; i < dim_; ++i) {
        if ((mask >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

std::uint64_t HypercubeDamage::parse_bit_string(const std::string& s, int dim) {
    if (static_cast<int>(s.size()) != dim) {
        throw InvalidInputError("bit string '" + s + "' does not have length " + std::to_string(dim));
    }
    std::uint64_t mask = 0;
    for (int i = 0; i < dim; ++i) {
        const char c = s[static_cast<std::size_t>(i)];
        if (c == '1') {
            mask |= std::uint64_t{1} << i;
        } else if (c != '0') {
            throw InvalidInputError("bit string '" + s + "' has a symbol other than 0/1");
        }
    }
    return mask;
}

DamageSet HypercubeDamage::to_damage_set() const {
    std::vector<Coord> coords;
    coords.reserve(masks_.size());
    for (std::uint64_t mask : masks_) coords.push_back(mask_to_coord(mask, dim_));
    return DamageSet(GridSpec(dim_, 2), std::move(coords));
}

std::uint64_t subcube_guarantee(int d, std::uint64_t m) {
    if (d < 1 || d > 63) throw InvalidInputError("hypercube dimension must lie in [1, 63]");
    const std::uint64_t big_n = std::uint64_t{1} << d;
    if (m == 0) return big_n;
    if (tiny_damage(d, m)) return big_n / 4;
    const std::uint64_t q = static_cast<std::uint64_t>(choose_q(d, m));
    const std::uint64_t p = prefix_subcube_count(m, q);
    const int inner_dim = d - log2_exact(p);
    if (inner_dim < 2) return 0;
    return std::uint64_t{1} << (inner_dim - 2);
}

SubcubePattern sperner_subcube(const HypercubeDamage& damage) {
    const int d = damage.dim();
    const std::uint64_t m = damage.size();
    if (!sperner_applicable(d, m)) {
        throw BoundNotApplicableError(
            "the antichain bound needs d > C(m, floor(m/2))/2; not met for d = " +
            std::to_string(d) + ", m = " + std::to_string(m));
    }

    // D restricted to each of the 2d halfspaces, indexed by (axis, bit).
    std::vector<std::vector<std::uint64_t>> cut(static_cast<std::size_t>(2 * d));
    for (std::uint64_t mask : damage.masks()) {
        for (int i = 0; i < d; ++i) {
            const int bit = static_cast<int>((mask >> i) & 1);
            cut[static_cast<std::size_t>(2 * i + bit)].push_back(mask);
        }
    }

    auto subset_of = [&](int x, int y) {
        const auto& small = cut[static_cast<std::size_t>(x)];
        const auto& large = cut[static_cast<std::size_t>(y)];
        if (small.size() > large.size()) return false;
        // both sorted since masks() is sorted
        return std::includes(large.begin(), large.end(), small.begin(), small.end());
    };

    for (int x = 0; x < 2 * d; ++x) {
        for (int y = 0; y < 2 * d; ++y) {
            if (x == y || !subset_of(x, y)) continue;
            const int xi = x / 2, xb = x % 2;
            const int yi = y / 2, yb = y % 2;
            std::string symbols(static_cast<std::size_t>(d), '*');
            symbols[static_cast<std::size_t>(xi)] = static_cast<char>('0' + xb);
            symbols[static_cast<std::size_t>(yi)] = static_cast<char>('0' + (1 - yb));
            return SubcubePattern{symbols};
        }
    }
    throw Error("internal: more halfspace cuts than the antichain bound yet no comparable pair");
}

SubcubePattern find_subgraph(const HypercubeDamage& damage) {
    const int d = damage.dim();
    const std::uint64_t m = damage.size();
    if (m == 0) return SubcubePattern{std::string(static_cast<std::size_t>(d), '*')};
    if (tiny_damage(d, m)) return sperner_subcube(damage);

    if (subcube_guarantee(d, m) < 1) {
        throw EmptyResultError("subcube guarantee is below one vertex for d = " +
                               std::to_string(d) + ", m = " + std::to_string(m));
    }
    const std::uint64_t q = static_cast<std::uint64_t>(choose_q(d, m));
    const std::uint64_t p = prefix_subcube_count(m, q);
    const int prefix_len = log2_exact(p);

    std::vector<std::uint64_t> damage_per_prefix(p, 0);
    for (std::uint64_t mask : damage.masks()) {
        ++damage_per_prefix[prefix_value(mask, prefix_len)];
    }
    std::uint64_t best = 0;
    for (std::uint64_t cand = 1; cand < p; ++cand) {
        if (damage_per_prefix[cand] < damage_per_prefix[best]) best = cand;
    }

    const std::uint64_t prefix_mask = prefix_bits_to_mask(best, prefix_len);
    std::vector<std::uint64_t> inner;
    for (std::uint64_t mask : damage.masks()) {
        if (prefix_value(mask, prefix_len) == best) inner.push_back(mask >> prefix_len);
    }
    const HypercubeDamage inner_damage(d - prefix_len, std::move(inner));
    const SubcubePattern found = sperner_subcube(inner_damage);

    std::string symbols(static_cast<std::size_t>(d), '*');
    for (int i = 0; i < prefix_len; ++i) {
        symbols[static_cast<std::size_t>(i)] =
            static_cast<char>('0' + ((prefix_mask >> i) & 1));
    }
    for (int i = prefix_len; i < d; ++i) {
        symbols[static_cast<std::size_t>(i)] = found.symbols[static_cast<std::size_t>(i - prefix_len)];
    }
    return SubcubePattern{symbols};
}

HypercubeDamage codim2_damage(int m) {
    if (m < 2 || m % 2 != 0) throw InvalidInputError("codim2 damage needs an even m >= 2");
    const std::uint64_t dim64 = binom_sat(m, m / 2) / 2;
    if (dim64 > 63) {
        throw InvalidInputError("codim2 damage for m = " + std::to_string(m) +
                                " needs dimension " + std::to_string(dim64) +
                                ", above the 63-axis capacity");
    }
    const int d = static_cast<int>(dim64);

    // Axis i encodes the i-th equal bipartition of {1..m}, bipartitions
    // ordered by lexicographic order of the side containing element 1.
    std::vector<std::uint64_t> points(static_cast<std::size_t>(m), 0);
    std::vector<int> side(static_cast<std::size_t>(m / 2));
    for (int i = 0; i < m / 2; ++i) side[static_cast<std::size_t>(i)] = i == 0 ? 1 : i + 1;
    // side[0] is always element 1; side[1..] enumerates combinations of
    // {2..m} of size m/2-1 in lexicographic order
    int axis = 0;
    while (true) {
        for (int idx = 0; idx < m / 2; ++idx) {
            const int element = side[static_cast<std::size_t>(idx)];
            points[static_cast<std::size_t>(element - 1)] |= std::uint64_t{1} << axis;
        }
        ++axis;
        // next combination over the tail side[1..]
        const int tail = m / 2 - 1;
        int pos = tail;
        while (pos >= 1 && side[static_cast<std::size_t>(pos)] == m - (tail - pos)) --pos;
        if (pos < 1) break;
        ++side[static_cast<std::size_t>(pos)];
        for (int t = pos + 1; t <= tail; ++t) {
            side[static_cast<std::size_t>(t)] = side[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    if (axis != d) throw Error("internal: bipartition enumeration does not match the dimension");
    return HypercubeDamage(d, std::move(points));
}

std::vector<int> bad_coordinates(const HypercubeDamage& damage) {
    const auto& masks = damage.masks();
    std::uint64_t bad = 0;
    for (std::size_t a = 0; a < masks.size(); ++a) {
        for (std::size_t b = a + 1; b < masks.size(); ++b) {
            const std::uint64_t diff = masks[a] ^ masks[b];
            if (std::popcount(diff) <= 2) bad |= diff;
        }
    }
    std::vector<int> result;
    for (int i = 0; i < damage.dim(); ++i) {
        if ((bad >> i) & 1) result.push_back(i);
    }
    return result;
}

namespace {

// Contraction of `axis` inside the subcube obtained by fixing the first
// prefix_len axes to prefix_mask (prefix_len == 0 contracts the whole
// cube).  The axis must be non-bad within that subcube.
MinorModel contract_within(const HypercubeDamage& damage, int prefix_len,
                           std::uint64_t prefix_mask, int axis) {
    const int d = damage.dim();
    const int minor_dim = d - prefix_len - 1;
    if (minor_dim < 1) throw InvalidInputError("contraction needs at least two free axes");

    MinorModel model;
    model.host = GridSpec(d, 2);
    model.minor = GridSpec(minor_dim, 2);
    model.branches.reserve(std::size_t{1} << minor_dim);

    // free axes other than the contracted one, ascending
    std::vector<int> free_axes;
    for (int i = prefix_len; i < d; ++i) {
        if (i != axis) free_axes.push_back(i);
    }

    for (std::uint64_t w = 0; w < (std::uint64_t{1} << minor_dim); ++w) {
        std::uint64_t base = prefix_mask;
        for (int t = 0; t < minor_dim; ++t) {
            if ((w >> t) & 1) base |= std::uint64_t{1} << free_axes[static_cast<std::size_t>(t)];
        }
        const std::uint64_t other = base | (std::uint64_t{1} << axis);

        BranchSet branch;
        branch.minor_vertex = mask_to_coord(w, minor_dim);
        if (!damage.contains(base)) branch.hosts.push_back(mask_to_coord(base, d));
        if (!damage.contains(other)) branch.hosts.push_back(mask_to_coord(other, d));
        if (branch.hosts.empty()) {
            throw Error("internal: both endpoints of a contracted pair are damaged "
                        "although the axis is not bad");
        }
        model.branches.push_back(std::move(branch));
    }
    compute_depth(model, damage.to_damage_set());
    return model;
}

// Bad coordinates among the free axes of the given prefix subcube.
std::uint64_t bad_mask_within(const HypercubeDamage& damage, int prefix_len,
                              std::uint64_t best_prefix_value) {
    std::vector<std::uint64_t> inside;
    for (std::uint64_t mask : damage.masks()) {
        if (prefix_value(mask, prefix_len) == best_prefix_value) inside.push_back(mask);
    }
    std::uint64_t bad = 0;
    for (std::size_t a = 0; a < inside.size(); ++a) {
        for (std::size_t b = a + 1; b < inside.size(); ++b) {
            const std::uint64_t diff = inside[a] ^ inside[b];
            if (std::popcount(diff) <= 2) bad |= diff;
        }
    }
    return bad;
}

}  // namespace

MinorModel contract_coordinate(const HypercubeDamage& damage, int axis) {
    const int d = damage.dim();
    if (axis < 0 || axis >= d) throw InvalidInputError("contraction axis out of range");
    const auto& masks = damage.masks();
    for (std::size_t a = 0; a < masks.size(); ++a) {
        for (std::size_t b = a + 1; b < masks.size(); ++b) {
            const std::uint64_t diff = masks[a] ^ masks[b];
            if (std::popcount(diff) <= 2 && ((diff >> axis) & 1)) {
                throw InvalidInputError(
                    "axis " + std::to_string(axis) + " is bad: damaged vertices " +
                    damage.bit_string(masks[a]) + " and " + damage.bit_string(masks[b]) +
                    " lie at distance " + std::to_string(std::popcount(diff)) +
                    " and differ on it");
            }
        }
    }
    return contract_within(damage, 0, 0, axis);
}

std::uint64_t minor_guarantee(int d, std::uint64_t m) {
    if (d < 1 || d > 63) throw InvalidInputError("hypercube dimension must lie in [1, 63]");
    const std::uint64_t big_n = std::uint64_t{1} << d;
    if (d >= 2 && (m < 1 || 2 * m - 2 < static_cast<std::uint64_t>(d))) {
        return big_n / 2;  // a non-bad coordinate always exists
    }
    if (d < 2 || 2 * m >= big_n) return 0;
    const long double log_ratio =
        std::log2(static_cast<long double>(big_n) / (2.0L * static_cast<long double>(m)));
    std::uint64_t p = 1;
    while (static_cast<long double>(p) * log_ratio <= 2.0L * static_cast<long double>(m)) {
        p <<= 1;
        if (p >= big_n) return 0;
    }
    const int prefix_len = log2_exact(p);
    if (prefix_len + 1 >= d) return 0;
    return std::uint64_t{1} << (d - prefix_len - 1);
}

MinorModel find_minor(const HypercubeDamage& damage) {
    const int d = damage.dim();
    const std::uint64_t m = damage.size();
    const std::uint64_t big_n = damage.vertex_count();

    if (d >= 2) {
        // Whole-cube contraction whenever some coordinate is not bad; with
        // 2m-2 < d this is guaranteed, beyond that it is opportunistic.
        std::uint64_t bad = 0;
        for (int i : bad_coordinates(damage)) bad |= std::uint64_t{1} << i;
        for (int i = 0; i < d; ++i) {
            if (!((bad >> i) & 1)) return contract_within(damage, 0, 0, i);
        }
    } else {
        // One axis only: the minor degenerates to a single surviving vertex.
        for (std::uint64_t v = 0; v < 2; ++v) {
            if (!damage.contains(v)) {
                MinorModel model;
                model.host = GridSpec(1, 2);
                model.minor = GridSpec(1, 1);
                model.branches.push_back(BranchSet{Coord{0}, {mask_to_coord(v, 1)}});
                model.depth = 0;
                return model;
            }
        }
        throw EmptyResultError("both vertices of the 1-cube are damaged");
    }

    if (2 * m >= big_n) {
        throw EmptyResultError("minor guarantee is below one vertex for d = " + std::to_string(d) +
                               ", m = " + std::to_string(m));
    }

    const long double log_ratio =
        std::log2(static_cast<long double>(big_n) / (2.0L * static_cast<long double>(m)));
    std::uint64_t p = 1;
    while (static_cast<long double>(p) * log_ratio <= 2.0L * static_cast<long double>(m)) {
        p <<= 1;
        if (p >= big_n) {
            throw EmptyResultError("minor guarantee is below one vertex for d = " +
                                   std::to_string(d) + ", m = " + std::to_string(m));
        }
    }
    const int prefix_len = log2_exact(p);
    if (prefix_len + 1 >= d) {
        throw EmptyResultError("minor guarantee is below one vertex for d = " + std::to_string(d) +
                               ", m = " + std::to_string(m));
    }

    std::vector<std::uint64_t> damage_per_prefix(p, 0);
    for (std::uint64_t mask : damage.masks()) {
        ++damage_per_prefix[prefix_value(mask, prefix_len)];
    }

    // Subcubes with at most (1/2) log2(N/2m) damaged vertices, least
    // damaged first, prefix order breaking ties.
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t cand = 0; cand < p; ++cand) candidates.push_back(cand);
    std::stable_sort(candidates.begin(), candidates.end(), [&](std::uint64_t a, std::uint64_t b) {
        return damage_per_prefix[a] < damage_per_prefix[b];
    });
    for (std::uint64_t cand : candidates) {
        const std::uint64_t cnt = damage_per_prefix[cand];
        // cnt <= (1/2) log2(N/(2m))  <=>  2^(2 cnt) * 2m <= N
        if (cnt >= 32 || (static_cast<unsigned __int128>(1) << (2 * cnt)) *
                                 (2 * static_cast<unsigned __int128>(m)) >
                             static_cast<unsigned __int128>(big_n)) {
            break;  // sorted ascending, nothing further qualifies
        }
        const std::uint64_t bad = bad_mask_within(damage, prefix_len, cand);
        for (int axis = prefix_len; axis < d; ++axis) {
            if (!((bad >> axis) & 1)) {
                return contract_within(damage, prefix_len, prefix_bits_to_mask(cand, prefix_len),
                                       axis);
            }
        }
    }
    throw Error("internal: no lightly damaged subcube admitted a contraction");
}

std::uint64_t default_blocking_target(int d, int m) {
    if (d < 1 || d > 63) throw InvalidInputError("hypercube dimension must lie in [1, 63]");
    const std::uint64_t big_n = std::uint64_t{1} << d;
    if (m <= 0) return big_n + 1;

    const long double n_real = static_cast<long double>(big_n);
    const long double t1 = n_real * static_cast<long double>(d) / static_cast<long double>(m);
    long double best = t1;
    const long double loglog = std::log2(static_cast<long double>(d));
    if (loglog > 0 && static_cast<long double>(m) > loglog) {
        const long double t2 =
            n_real * std::log2(static_cast<long double>(m) / loglog) * loglog /
            static_cast<long double>(m);
        best = std::min(best, t2);
    }
    if (best < 1.0L) return 1;
    if (best > n_real) return big_n;
    return static_cast<std::uint64_t>(best);
}

BlockingSearchResult random_blocking_damage(int d, int m,
                                            std::optional<std::uint64_t> target_size,
                                            int max_attempts, std::uint64_t seed) {
    if (d < 1 || d > 63) throw InvalidInputError("hypercube dimension must lie in [1, 63]");
    const std::uint64_t big_n = std::uint64_t{1} << d;
    if (m < 0 || static_cast<std::uint64_t>(m) >= big_n) {
        throw InvalidInputError("random blocking damage needs 0 <= m < N");
    }
    if (max_attempts < 1) throw InvalidInputError("need at least one attempt");

    const std::uint64_t target = target_size ? *target_size : default_blocking_target(d, m);
    std::mt19937_64 rng(seed);

    // Floyd's uniform m-subset sample; deterministic for a given seed.
    auto draw = [&]() {
        std::unordered_set<std::uint64_t> chosen;
        chosen.reserve(static_cast<std::size_t>(m) * 2);
        for (std::uint64_t j = big_n - static_cast<std::uint64_t>(m); j < big_n; ++j) {
            const std::uint64_t t = rng() % (j + 1);
            if (!chosen.insert(t).second) chosen.insert(j);
        }
        std::vector<std::uint64_t> masks(chosen.begin(), chosen.end());
        return HypercubeDamage(d, std::move(masks));
    };

    BlockingSearchResult best{false, 0, target, big_n + 1, HypercubeDamage(d, {})};
    const int workers = thread_budget();
    int attempt = 0;
    while (attempt < max_attempts) {
        // evaluate a deterministic batch; acceptance is by attempt index
        const int batch = std::min(workers, max_attempts - attempt);
        std::vector<HypercubeDamage> samples;
        samples.reserve(static_cast<std::size_t>(batch));
        for (int i = 0; i < batch; ++i) samples.push_back(draw());

        std::vector<std::future<std::uint64_t>> sizes;
        for (int i = 0; i < batch; ++i) {
            sizes.push_back(std::async(batch > 1 ? std::launch::async : std::launch::deferred,
                                       [&samples, i] { return oracle::largest_subcube_vertices(samples[static_cast<std::size_t>(i)]); }));
        }
        for (int i = 0; i < batch; ++i) {
            const std::uint64_t achieved = sizes[static_cast<std::size_t>(i)].get();
            ++attempt;
            if (achieved < best.achieved_size) {
                best.achieved_size = achieved;
                best.damage = samples[static_cast<std::size_t>(i)];
            }
            if (achieved < target) {
                best.success = true;
                best.attempts = attempt;
                best.damage = samples[static_cast<std::size_t>(i)];
                best.achieved_size = achieved;
                return best;
            }
        }
    }
    best.attempts = attempt;
    return best;
}

}  // namespace gridsalvage::hypercube
