#ifndef PEDPOD_PARTITION_HPP
#define PEDPOD_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pedpod {

using Part = std::int64_t;

/// Raised when a value lies outside the domain of an operation
/// (non-positive part, a partition outside a map's domain, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/* A partition stored densely as a non-increasing sequence of positive
 * parts. The empty sequence is the unique partition of 0.
 */
class Partition {
public:
    Partition() = default;

    /// Canonicalizes an arbitrary multiset of parts. Throws DomainError on
    /// any part <= 0.
    static Partition from_parts(std::span<const Part> raw);
    static Partition from_parts(std::initializer_list<Part> raw)
    {
        return from_parts(std::span<const Part>(raw.begin(), raw.size()));
    }

    /// Text form "(5,5,4,3)" / "()"; whitespace is ignored.
    static Partition parse(std::string_view text);

    std::span<const Part> parts() const { return parts_; }
    Part weight() const { return weight_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    Part operator[](std::size_t i) const { return parts_[i]; }

    /// Throws DomainError on the empty partition.
    Part largest() const;
    std::size_t multiplicity(Part value) const;
    bool contains(Part value) const { return multiplicity(value) > 0; }

    std::string to_string() const;

    /* Lexicographic on the part sequence; "lexicographically decreasing"
     * listings sort with std::greater<>. */
    friend bool operator==(const Partition &, const Partition &) = default;
    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Part> parts_;
    Part weight_ = 0;
};

Partition make_partition(std::span<const Part> raw);

enum class ClassId {
    Ped,
    PedGt1,
    D1,
    D2,
    D3,
    Pod,
    PodGt2,
    O1,
    O2,
    O3,
    FourRegular,
    All,
};

inline constexpr ClassId all_class_ids[] = {
    ClassId::Ped, ClassId::PedGt1, ClassId::D1, ClassId::D2, ClassId::D3, ClassId::Pod,
    ClassId::PodGt2, ClassId::O1, ClassId::O2, ClassId::O3, ClassId::FourRegular, ClassId::All,
};

/// The ten restricted classes, without the FOUR_REGULAR and ALL helpers.
inline constexpr ClassId restricted_class_ids[] = {
    ClassId::Ped, ClassId::PedGt1, ClassId::D1, ClassId::D2, ClassId::D3,
    ClassId::Pod, ClassId::PodGt2, ClassId::O1, ClassId::O2, ClassId::O3,
};

/// Stable lower-case name: "ped", "ped_gt1", "d1", ..., "four_regular", "all".
std::string_view class_name(ClassId c);
/// Case-insensitive; throws std::invalid_argument on unknown names.
ClassId parse_class(std::string_view name);

bool is_member(const Partition &p, ClassId c);

struct ShapeDescriptor {
    Part largest = 0;
    std::size_t largest_multiplicity = 0;
    std::optional<Part> second;
    /// Everything after the copies of `largest` and one copy of `second`.
    Partition tail;
};

/// Throws DomainError on the empty partition.
ShapeDescriptor shape(const Partition &p);
Partition recompose(const ShapeDescriptor &s);

} // namespace pedpod

#endif
