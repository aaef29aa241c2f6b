#include "pedpod/counting.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "pedpod/enumeration.hpp"

namespace pedpod {

namespace {

constexpr std::array<std::string_view, 3> backend_names = {"enum", "dp", "series"};

bool restricted_parity(Part p, Restriction r)
{
    return r == Restriction::DistinctEven ? p % 2 == 0 : p % 2 == 1;
}

// Largest-part-conditioned sums for D1..D3 (odd largest) and O1..O3
// (even largest).
std::vector<BigInt> largest_part_counts(ClassId c, Part n_max)
{
    const bool odd_side = c == ClassId::D1 || c == ClassId::D2 || c == ClassId::D3;
    const RestrictedTable table(n_max, 1, odd_side ? Restriction::DistinctEven : Restriction::DistinctOdd);
    const Part first = odd_side ? 1 : 2;
    const bool repeated = c == ClassId::D2 || c == ClassId::O2;
    const bool unique = c == ClassId::D3 || c == ClassId::O3;

    std::vector<BigInt> counts(static_cast<std::size_t>(n_max) + 1, 0);
    for (Part n = 1; n <= n_max; ++n) {
        BigInt &sum = counts[static_cast<std::size_t>(n)];
        for (Part o = first; o <= n; o += 2) {
            if (repeated) {
                if (2 * o <= n)
                    sum += table.at(n - 2 * o, o);
            } else if (unique) {
                sum += table.at(n - o, o - 1);
            } else {
                sum += table.at(n - o, o);
            }
        }
    }
    return counts;
}

std::vector<BigInt> euler_partition_numbers(Part n_max)
{
    std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (Part n = 1; n <= n_max; ++n) {
        BigInt acc = 0;
        for (Part k = 1;; ++k) {
            const Part g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            const Part g2 = k * (3 * k + 1) / 2;
            BigInt term = p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                term += p[static_cast<std::size_t>(n - g2)];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

std::vector<BigInt> four_regular_counts(Part n_max)
{
    std::vector<BigInt> c(static_cast<std::size_t>(n_max) + 1, 0);
    c[0] = 1;
    for (Part k = 1; k <= n_max; ++k) {
        if (k % 4 == 0)
            continue;
        for (Part w = k; w <= n_max; ++w)
            c[static_cast<std::size_t>(w)] += c[static_cast<std::size_t>(w - k)];
    }
    return c;
}

std::vector<BigInt> dp_counts(ClassId c, Part n_max)
{
    switch (c) {
    case ClassId::All:
        return euler_partition_numbers(n_max);
    case ClassId::FourRegular:
        return four_regular_counts(n_max);
    case ClassId::D1:
    case ClassId::D2:
    case ClassId::D3:
    case ClassId::O1:
    case ClassId::O2:
    case ClassId::O3:
        return largest_part_counts(c, n_max);
    default:
        break;
    }

    Part min_part = 1;
    Restriction r = Restriction::DistinctEven;
    switch (c) {
    case ClassId::PedGt1:
        min_part = 2;
        break;
    case ClassId::Pod:
        r = Restriction::DistinctOdd;
        break;
    case ClassId::PodGt2:
        min_part = 3;
        r = Restriction::DistinctOdd;
        break;
    default:
        break;
    }
    const RestrictedTable table(n_max, min_part, r);
    std::vector<BigInt> counts;
    counts.reserve(static_cast<std::size_t>(n_max) + 1);
    for (Part n = 0; n <= n_max; ++n)
        counts.push_back(table.at(n, n));
    // PED_GT1 and POD_GT2 exclude the empty partition
    if (min_part > 1)
        counts[0] = 0;
    return counts;
}

std::vector<BigInt> enum_counts(ClassId c, Part n_max)
{
    if (n_max > enum_backend_limit)
        throw BackendUnavailable("enumeration backend is limited to n <= " + std::to_string(enum_backend_limit));
    std::vector<BigInt> counts;
    for (Part n = 0; n <= n_max; ++n) {
        unsigned long k = 0;
        for (const Partition &p : partitions_of(n))
            k += is_member(p, c) ? 1 : 0;
        counts.emplace_back(k);
    }
    return counts;
}

std::vector<BigInt> series_counts(ClassId c, Part n_max)
{
    auto spec = series_spec_for(c, n_max);
    if (!spec)
        throw BackendUnavailable("no product generating function for class " + std::string(class_name(c)));
    auto counts = series_coefficients(*spec);
    // the constant term counts the empty partition
    if (!is_member(Partition{}, c))
        counts[0] -= 1;
    return counts;
}

} // namespace

std::string_view backend_name(Backend b)
{
    return backend_names[static_cast<std::size_t>(b)];
}

Backend parse_backend(std::string_view name)
{
    std::string lower;
    for (char c : name)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (std::size_t i = 0; i < backend_names.size(); ++i) {
        if (backend_names[i] == lower)
            return static_cast<Backend>(i);
    }
    throw std::invalid_argument("unknown backend \"" + std::string(name) + "\"");
}

RestrictedTable::RestrictedTable(Part n_max, Part min_part, Restriction r)
    : n_max_(n_max)
{
    if (n_max < 0)
        throw DomainError("RestrictedTable: n_max must be non-negative");
    if (min_part < 1)
        throw DomainError("RestrictedTable: min_part must be at least 1");
    const auto width = static_cast<std::size_t>(n_max) + 1;
    by_max_.reserve(width);
    by_max_.emplace_back(width, 0);
    by_max_[0][0] = 1;
    for (Part p = 1; p <= n_max; ++p) {
        std::vector<BigInt> col = by_max_.back();
        if (p >= min_part) {
            if (restricted_parity(p, r)) {
                // include p at most once
                const auto &prev = by_max_.back();
                for (Part w = p; w <= n_max; ++w)
                    col[static_cast<std::size_t>(w)] += prev[static_cast<std::size_t>(w - p)];
            } else {
                for (Part w = p; w <= n_max; ++w)
                    col[static_cast<std::size_t>(w)] += col[static_cast<std::size_t>(w - p)];
            }
        }
        by_max_.push_back(std::move(col));
    }
}

const BigInt &RestrictedTable::at(Part weight, Part max_part) const
{
    if (weight < 0 || weight > n_max_)
        throw DomainError("RestrictedTable::at: weight out of range");
    max_part = std::clamp<Part>(max_part, 0, n_max_);
    return by_max_[static_cast<std::size_t>(max_part)][static_cast<std::size_t>(weight)];
}

BigInt restricted_count(Part n, Part max_part, Part min_part, Restriction r)
{
    if (n < 0)
        throw DomainError("restricted_count: n must be non-negative");
    if (max_part < 0)
        throw DomainError("restricted_count: max_part must be non-negative");
    return RestrictedTable(n, min_part, r).at(n, max_part);
}

CountTable count_table(ClassId c, Part n_max, Backend b)
{
    if (n_max < 0)
        throw DomainError("count_table: n_max must be non-negative");
    CountTable t{c, n_max, b, {}};
    switch (b) {
    case Backend::Enum:
        t.counts = enum_counts(c, n_max);
        break;
    case Backend::Dp:
        t.counts = dp_counts(c, n_max);
        break;
    case Backend::Series:
        t.counts = series_counts(c, n_max);
        break;
    }
    return t;
}

BigInt class_count(ClassId c, Part n, Backend b)
{
    if (n < 0)
        throw DomainError("class_count: n must be non-negative");
    return count_table(c, n, b).counts.back();
}

BigInt four_regular_count(Part n)
{
    if (n < 0)
        throw DomainError("four_regular_count: n must be non-negative");
    return four_regular_counts(n).back();
}

std::vector<BigInt> series_coefficients(const SeriesProductSpec &spec)
{
    if (spec.n_max < 0)
        throw std::invalid_argument("series truncation order must be non-negative");
    const Part N = spec.n_max;
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1, 0);
    c[0] = 1;

    for (const SeriesFactor &f : spec.factors) {
        if (f.modulus <= 0 || f.start < 1)
            throw std::invalid_argument("series factor needs a positive modulus and start >= 1");
        if ((f.sign != 1 && f.sign != -1) || (f.exponent != 1 && f.exponent != -1))
            throw std::invalid_argument("series factor sign and exponent must be +1 or -1");

        const Part residue = ((f.residue % f.modulus) + f.modulus) % f.modulus;
        Part k = f.start + ((residue - f.start % f.modulus) % f.modulus + f.modulus) % f.modulus;
        // factors with k > N do not touch the truncation
        for (; k <= N; k += f.modulus) {
            if (f.exponent == 1) {
                for (Part i = N; i >= k; --i) {
                    if (f.sign == 1)
                        c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - k)];
                    else
                        c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - k)];
                }
            } else {
                // divide by (1 + sign q^k): prefix recurrence
                for (Part i = k; i <= N; ++i) {
                    if (f.sign == 1)
                        c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - k)];
                    else
                        c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - k)];
                }
            }
        }
    }
    return c;
}

std::optional<SeriesProductSpec> series_spec_for(ClassId c, Part n_max)
{
    // (1+q^k) over the distinct parity, 1/(1-q^k) over the free parity
    auto distinct_parity = [n_max](Part distinct_residue, Part distinct_start, Part free_start) {
        return SeriesProductSpec{
            {
                SeriesFactor{distinct_residue, 2, distinct_start, +1, +1},
                SeriesFactor{1 - distinct_residue, 2, free_start, -1, -1},
            },
            n_max,
        };
    };
    switch (c) {
    case ClassId::Ped:
        return distinct_parity(0, 2, 1);
    case ClassId::PedGt1:
        return distinct_parity(0, 2, 3);
    case ClassId::Pod:
        return distinct_parity(1, 1, 2);
    case ClassId::PodGt2:
        return distinct_parity(1, 3, 4);
    case ClassId::FourRegular:
        // prod (1-q^{4k}) / (1-q^k)
        return SeriesProductSpec{
            {
                SeriesFactor{0, 1, 1, -1, -1},
                SeriesFactor{0, 4, 4, -1, +1},
            },
            n_max,
        };
    default:
        return std::nullopt;
    }
}

} // namespace pedpod
