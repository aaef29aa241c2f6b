#ifndef PEDPOD_BIJECTIONS_HPP
#define PEDPOD_BIJECTIONS_HPP

#include <string_view>
#include <vector>

#include "pedpod/partition.hpp"

namespace pedpod {

/* Every map below is pure, checks its domain eagerly (DomainError) and
 * re-canonicalizes its result. "n" is always the weight the identity is
 * stated at, e.g. thm1.add maps D1(n-1) into PED(n).
 */

enum class BijectionId {
    B1,
    B2Shift,
    B2ExchangeCA,
    B2ExchangeDB,
    B2Exceptional,
    B2Total,
    B3Add,
    B3Sub,
    B4,
    B5Shift,
    B5Exchange,
    B5Total,
    B6Add,
    B6Sub,
};

inline constexpr BijectionId all_bijection_ids[] = {
    BijectionId::B1, BijectionId::B2Shift, BijectionId::B2ExchangeCA, BijectionId::B2ExchangeDB,
    BijectionId::B2Exceptional, BijectionId::B2Total, BijectionId::B3Add, BijectionId::B3Sub,
    BijectionId::B4, BijectionId::B5Shift, BijectionId::B5Exchange, BijectionId::B5Total,
    BijectionId::B6Add, BijectionId::B6Sub,
};

/// Which summand of a two-term left-hand side a preimage belongs to:
/// the class at n, or the class at n-3.
enum class SourceTag { Same, Minus3 };

std::string_view source_tag_name(SourceTag t, ClassId cls);

struct TaggedPreimage {
    SourceTag source = SourceTag::Same;
    Partition partition;

    friend bool operator==(const TaggedPreimage &, const TaggedPreimage &) = default;
    friend auto operator<=>(const TaggedPreimage &a, const TaggedPreimage &b)
    {
        if (auto c = a.source <=> b.source; c != 0)
            return c;
        return a.partition <=> b.partition;
    }
};

struct BijectionInfo {
    BijectionId id;
    std::string_view name;
    /// domain weight is n + domain_offset
    Part domain_offset;
    /// codomain weight is n + codomain_offset (SourceTag::Minus3 subtracts 3 more)
    Part codomain_offset;
    /// codomain is a tagged union of two classes
    bool tagged;
    /// case table reconstructed by analogy and validated only by audit
    bool reconstructed;
    /// audits below this n are informational
    Part min_n;
    std::string_view summary;

    Part weight_shift() const { return codomain_offset - domain_offset; }
};

const BijectionInfo &bijection_info(BijectionId id);
/// Accepts the stable name ("thm2.exchange.CA") case-insensitively.
BijectionId parse_bijection(std::string_view name);

/* Shape sets used by the exchange maps for the ped side. All take a
 * partition of weight n = p.weight() and are false outside PED.
 *   A  (2l+1, 2l+1, ...) containing a 1
 *   B  (2l+1, 2l, ...)   containing a 1
 *   C  (2l, ...)         without 1s
 *   D  (2l+1, h, ...)    h <= 2l-1, without 1s
 * and the exceptional subsets A', B', C', D'.
 */
namespace ped_sets {
bool in_shift_image(const Partition &p);
bool in_a(const Partition &p);
bool in_b(const Partition &p);
bool in_c(const Partition &p);
bool in_d(const Partition &p);
bool in_a_prime(const Partition &p);
bool in_b_prime(const Partition &p);
bool in_c_prime(const Partition &p);
bool in_d_prime(const Partition &p);
} // namespace ped_sets

/* Pod-side analogues, false outside POD.
 *   A  (2l, 2l, ...)    containing a 1 or a 2
 *   B  (2l, 2l-1, ...)  containing a 1 or a 2
 *   C  (2l+1, h, ...)   all parts >= 3
 *   D  (2l, h, ...)     h <= 2l-2, all parts >= 3
 */
namespace pod_sets {
bool in_shift_image(const Partition &p);
bool in_a(const Partition &p);
bool in_b(const Partition &p);
bool in_c(const Partition &p);
bool in_d(const Partition &p);
} // namespace pod_sets

// D1(n-1) -> PED(n) with even largest part
Partition b1_forward(const Partition &p);
Partition b1_inverse(const Partition &p);

// D2(n-3) -> PED(n) partitions shaped (2l+1, 2l, ...)
Partition b2_shift_forward(const Partition &p);
Partition b2_shift_inverse(const Partition &p);

// C \ C' -> A \ A'
Partition b2_exchange_ca(const Partition &p);
Partition b2_exchange_ca_inverse(const Partition &p);

// D \ D' -> B \ B'
Partition b2_exchange_db(const Partition &p);
Partition b2_exchange_db_inverse(const Partition &p);

// C' u D' -> A' u B'
Partition b2_exceptional(const Partition &p, Part n);
Partition b2_exceptional_inverse(const Partition &p, Part n);

// PED_GT1(n) -> D2(n) u D2(n-3)
TaggedPreimage b2_total(const Partition &p);
Partition b2_total_inverse(const TaggedPreimage &t);

// D3(n-1) -> PED(n) with even largest part and second part <= largest-2
Partition b3_add(const Partition &p);
Partition b3_add_inverse(const Partition &p);

// D3(n+2) -> the rest of PED(n)
Partition b3_sub(const Partition &p);
Partition b3_sub_inverse(const Partition &p);

// O1(n-1) -> POD(n) with odd largest part >= 3
Partition b4_forward(const Partition &p);
Partition b4_inverse(const Partition &p);

// O2(n-3) -> POD(n) partitions shaped (2l, 2l-1, ...), l >= 2
Partition b5_shift_forward(const Partition &p);
Partition b5_shift_inverse(const Partition &p);

// C u D -> A u B on the pod side; filler 2s are sized by weight
Partition b5_exchange(const Partition &p, Part n);
Partition b5_exchange_inverse(const Partition &p, Part n);

// POD_GT2(n) -> O2(n) u O2(n-3)
TaggedPreimage b5_total(const Partition &p);
Partition b5_total_inverse(const TaggedPreimage &t);

// O3(n-1) -> POD(n) with odd largest >= 3 and second part <= largest-2
Partition b6_add(const Partition &p);
Partition b6_add_inverse(const Partition &p);

// O3(n+2) -> the rest of POD(n)
Partition b6_sub(const Partition &p);
Partition b6_sub_inverse(const Partition &p);

// Uniform access used by audits and the CLI.
bool in_domain(BijectionId id, const Partition &p, Part n);
bool in_codomain(BijectionId id, const TaggedPreimage &t, Part n);
Part domain_weight(BijectionId id, Part n);
Part codomain_weight(BijectionId id, SourceTag tag, Part n);
std::vector<Partition> enumerate_domain(BijectionId id, Part n);
std::vector<TaggedPreimage> enumerate_codomain(BijectionId id, Part n);
TaggedPreimage apply_forward(BijectionId id, const Partition &p, Part n);
Partition apply_inverse(BijectionId id, const TaggedPreimage &t, Part n);

/// The n a bijection input belongs to, recovered from its weight.
Part reference_n_for_domain(BijectionId id, const Partition &p);
Part reference_n_for_codomain(BijectionId id, const TaggedPreimage &t);

} // namespace pedpod

#endif
