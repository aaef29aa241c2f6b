#ifndef PEDPOD_VERIFICATION_HPP
#define PEDPOD_VERIFICATION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pedpod/bijections.hpp"
#include "pedpod/counting.hpp"

namespace pedpod {

enum class IdentityId { T1, T2, T3, T4, T5, T6 };

inline constexpr IdentityId all_identity_ids[] = {
    IdentityId::T1, IdentityId::T2, IdentityId::T3, IdentityId::T4, IdentityId::T5, IdentityId::T6,
};

/// count(cls, n + offset)
struct IdentityTerm {
    ClassId cls;
    Part offset;
};

/* lhs[0](n) + lhs[1](n) == rhs(n), claimed for every n >= threshold. */
struct IdentitySpec {
    IdentityId id;
    std::string_view name;
    IdentityTerm lhs[2];
    IdentityTerm rhs;
    Part threshold;
};

const IdentitySpec &identity_spec(IdentityId id);
IdentityId parse_identity(std::string_view name);

struct IdentityRow {
    Part n = 0;
    BigInt lhs_first;
    BigInt lhs_second;
    BigInt rhs;
    bool pass = false;
    /// below the identity's threshold; reported but not part of the verdict
    bool informational = false;
};

struct BijectionRow {
    Part n = 0;
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    bool total = true;
    bool into = true;
    bool injective = true;
    bool surjective = true;
    bool round_trip = true;
    bool weight_ok = true;
    bool informational = false;

    bool pass() const { return total && into && injective && surjective && round_trip && weight_ok; }
};

struct ComparisonRow {
    std::string check;
    ClassId cls = ClassId::All;
    Part n = 0;
    BigInt left;
    BigInt right;
    bool pass = false;
};

/// Sizes of the ped-side shape sets at one n and the verdicts on the
/// three exchange maps.
struct StructureRow {
    Part n = 0;
    std::size_t a = 0, b = 0, c = 0, d = 0;
    std::size_t a_prime = 0, b_prime = 0, c_prime = 0, d_prime = 0;
    bool disjoint = true;
    bool cardinality = true;
    bool ca_bijective = true;
    bool db_bijective = true;
    bool exceptional_bijective = true;

    bool pass() const { return disjoint && cardinality && ca_bijective && db_bijective && exceptional_bijective; }
};

struct Counterexample {
    Part n = 0;
    std::string property;
    std::string detail;
};

inline constexpr std::size_t max_counterexamples = 100;

struct AuditReport {
    std::string subject;
    Part n_lo = 0;
    Part n_hi = 0;
    std::optional<Backend> backend;
    bool reconstructed = false;
    bool pass = true;

    std::vector<IdentityRow> identity_rows;
    std::vector<BijectionRow> bijection_rows;
    std::vector<ComparisonRow> comparison_rows;
    std::vector<StructureRow> structure_rows;

    std::vector<Counterexample> counterexamples;
    /// failures beyond max_counterexamples
    std::size_t counterexamples_dropped = 0;

    void add_counterexample(Counterexample c);
    /// Appends rows and counterexamples of `other`, and its verdict.
    void merge(AuditReport other);
};

/* Counts at n + offset < 0 are 0. Throws BackendUnavailable when the
 * backend cannot count one of the classes involved. */
AuditReport verify_identity(IdentityId id, Part n_lo, Part n_hi, Backend backend);

/// Exhaustive audit at one n; failures are recorded, never thrown.
AuditReport audit_bijection(BijectionId id, Part n);
/// n_lo..n_hi, evaluated concurrently and assembled in ascending n.
AuditReport audit_bijection(BijectionId id, Part n_lo, Part n_hi);

/* ENUM = DP for every class up to min(n_max, 35), DP = SERIES for the
 * product classes and PED = FOUR_REGULAR up to n_max. */
AuditReport cross_check_counts(Part n_max);
inline constexpr Part cross_check_enum_limit = 35;

/// Disjointness of A, B, C, D (and primes) and bijectivity of the three
/// exchange maps, at every n in range.
AuditReport thm2_structure_check(Part n_lo, Part n_hi);

} // namespace pedpod

#endif
