#ifndef PEDPOD_COUNTING_HPP
#define PEDPOD_COUNTING_HPP

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "pedpod/partition.hpp"

namespace pedpod {

using BigInt = mpz_class;

enum class Backend { Enum, Dp, Series };

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

/// A backend cannot serve the request (no product form, n past the
/// enumeration limit).
class BackendUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest n the enumeration backend accepts.
inline constexpr Part enum_backend_limit = 50;

enum class Restriction { DistinctEven, DistinctOdd };

/* Number of partitions of n with every part in [min_part, max_part] where
 * parts of the restricted parity appear at most once and the other parity
 * is unrestricted.
 */
BigInt restricted_count(Part n, Part max_part, Part min_part, Restriction r);

/* All values restricted_count(w, p, min_part, r) for 0 <= w, p <= n_max,
 * filled column by column over the largest admissible part p. */
class RestrictedTable {
public:
    RestrictedTable(Part n_max, Part min_part, Restriction r);

    /// Clamps max_part into [0, n_max]; weight must lie in [0, n_max].
    const BigInt &at(Part weight, Part max_part) const;
    Part n_max() const { return n_max_; }

private:
    Part n_max_;
    // by_max_[p][w]
    std::vector<std::vector<BigInt>> by_max_;
};

struct CountTable {
    ClassId cls = ClassId::All;
    Part n_max = 0;
    Backend backend = Backend::Dp;
    std::vector<BigInt> counts;
};

/// counts[n] for 0 <= n <= n_max.
CountTable count_table(ClassId c, Part n_max, Backend b = Backend::Dp);

/// Single count; negative n is rejected.
BigInt class_count(ClassId c, Part n, Backend b = Backend::Dp);

BigInt four_regular_count(Part n);

/* One factor family of an infinite product: for every k >= start with
 * k = residue (mod modulus), the term (1 + sign*q^k)^exponent, where sign
 * and exponent are +1 or -1. */
struct SeriesFactor {
    Part residue = 0;
    Part modulus = 1;
    Part start = 1;
    int sign = -1;
    int exponent = -1;
};

struct SeriesProductSpec {
    std::vector<SeriesFactor> factors;
    Part n_max = 0;
};

/// Coefficients of q^0..q^n_max of the truncated product.
std::vector<BigInt> series_coefficients(const SeriesProductSpec &spec);

/// Product form of a class, for PED, PED_GT1, POD, POD_GT2 and FOUR_REGULAR.
std::optional<SeriesProductSpec> series_spec_for(ClassId c, Part n_max);

} // namespace pedpod

#endif
