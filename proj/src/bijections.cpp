#include "pedpod/bijections.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>

#include "pedpod/enumeration.hpp"

namespace pedpod {

namespace {

constexpr std::array<BijectionInfo, 14> infos = {{
    {BijectionId::B1, "thm1.add", -1, 0, false, false, 0,
     "D1(n-1) -> PED(n), largest part even: add 1 to one copy of the largest part"},
    {BijectionId::B2Shift, "thm2.shift", -3, 0, false, false, 0,
     "D2(n-3) -> PED(n) shaped (2l+1,2l,...): add 2 and 1 to the first two parts"},
    {BijectionId::B2ExchangeCA, "thm2.exchange.CA", 0, 0, false, false, 0,
     "C\\C' -> A\\A': trade the even first part for a repeated odd part and 1s"},
    {BijectionId::B2ExchangeDB, "thm2.exchange.DB", 0, 0, false, false, 0,
     "D\\D' -> B\\B': trade the odd first part for a (2l+1,2l) head and 1s"},
    {BijectionId::B2Exceptional, "thm2.exceptional", 0, 0, false, false, 0,
     "C' u D' -> A' u B': (n)->(1^n), (2l+1,2l-1,...)->(2l-1,2l-1,...,1,1), (n-2,2)->(3,2,1^(n-5))"},
    {BijectionId::B2Total, "thm2.total", 0, 0, true, false, 0,
     "PED_GT1(n) -> D2(n) u D2(n-3)"},
    {BijectionId::B3Add, "thm3.add", -1, 0, false, false, 0,
     "D3(n-1) -> PED(n) shaped (2j,k,...) with k <= 2j-2: add 1 to the largest part"},
    {BijectionId::B3Sub, "thm3.sub", 2, 0, false, false, 0,
     "D3(n+2) -> remaining PED(n): subtract 2 from the largest part"},
    {BijectionId::B4, "thm4.add", -1, 0, false, true, 0,
     "O1(n-1) -> POD(n), largest part odd: add 1 to one copy of the largest part"},
    {BijectionId::B5Shift, "thm5.shift", -3, 0, false, false, 0,
     "O2(n-3) -> POD(n) shaped (2l,2l-1,...): add 2 and 1 to the two largest parts"},
    {BijectionId::B5Exchange, "thm5.exchange", 0, 0, false, false, 5,
     "C u D -> A u B on the pod side, filler 2s sized by weight"},
    {BijectionId::B5Total, "thm5.total", 0, 0, true, false, 5,
     "POD_GT2(n) -> O2(n) u O2(n-3)"},
    {BijectionId::B6Add, "thm6.add", -1, 0, false, true, 0,
     "O3(n-1) -> POD(n) shaped (2j+1,k,...) with k <= 2j-1: add 1 to the largest part"},
    {BijectionId::B6Sub, "thm6.sub", 2, 0, false, true, 0,
     "O3(n+2) -> remaining POD(n): subtract 2 from the largest part"},
}};

std::string lower(std::string_view s)
{
    std::string out;
    for (char c : s)
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

[[noreturn]] void reject(std::string_view map, const Partition &p, std::string_view why)
{
    throw DomainError(std::string(map) + ": " + p.to_string() + " " + std::string(why));
}

std::vector<Part> copy_parts(const Partition &p)
{
    return {p.parts().begin(), p.parts().end()};
}

/* Concatenates head, tail and fillers. Pattern maps only ever append
 * fillers below the tail, so the concatenation must already be
 * non-increasing. */
class Assembly {
public:
    Assembly &add(Part value, Part copies = 1)
    {
        if (copies < 0)
            throw std::logic_error("negative filler count");
        parts_.insert(parts_.end(), static_cast<std::size_t>(copies), value);
        return *this;
    }
    Assembly &add(std::span<const Part> run)
    {
        parts_.insert(parts_.end(), run.begin(), run.end());
        return *this;
    }
    Part weight() const
    {
        Part w = 0;
        for (Part x : parts_)
            w += x;
        return w;
    }
    Partition in_order() const
    {
        if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
            throw std::logic_error("pattern map would reorder tail parts");
        return Partition::from_parts(parts_);
    }

private:
    std::vector<Part> parts_;
};

std::span<const Part> slice(const Partition &p, std::size_t from, std::size_t drop_back = 0)
{
    auto parts = p.parts();
    if (from + drop_back > parts.size())
        throw std::logic_error("slice out of range");
    return parts.subspan(from, parts.size() - from - drop_back);
}

bool ped_nonempty(const Partition &p)
{
    return !p.empty() && is_member(p, ClassId::Ped);
}

bool pod_nonempty(const Partition &p)
{
    return !p.empty() && is_member(p, ClassId::Pod);
}

/// second part <= largest - 2, or no second part
bool gap_below_largest(const Partition &p)
{
    return p.size() == 1 || p[1] <= p[0] - 2;
}

bool b1_image(const Partition &p)
{
    return ped_nonempty(p) && p[0] % 2 == 0;
}

bool b3_add_image(const Partition &p)
{
    return ped_nonempty(p) && p[0] % 2 == 0 && gap_below_largest(p);
}

bool b3_sub_image(const Partition &p)
{
    return ped_nonempty(p) && !b3_add_image(p);
}

bool b4_image(const Partition &p)
{
    return pod_nonempty(p) && p[0] % 2 == 1 && p[0] >= 3;
}

bool b6_add_image(const Partition &p)
{
    return pod_nonempty(p) && p[0] % 2 == 1 && p[0] >= 3 && gap_below_largest(p);
}

bool b6_sub_image(const Partition &p)
{
    return is_member(p, ClassId::Pod) && !b6_add_image(p);
}

bool has_one_or_two(const Partition &p)
{
    return p.contains(1) || p.contains(2);
}

} // namespace

std::string_view source_tag_name(SourceTag t, ClassId cls)
{
    if (cls == ClassId::O2)
        return t == SourceTag::Same ? "O2(n)" : "O2(n-3)";
    return t == SourceTag::Same ? "D2(n)" : "D2(n-3)";
}

const BijectionInfo &bijection_info(BijectionId id)
{
    return infos[static_cast<std::size_t>(id)];
}

BijectionId parse_bijection(std::string_view name)
{
    const std::string key = lower(name);
    for (const auto &info : infos) {
        if (lower(info.name) == key)
            return info.id;
    }
    throw std::invalid_argument("unknown bijection \"" + std::string(name) + "\"");
}

namespace ped_sets {

bool in_shift_image(const Partition &p)
{
    return ped_nonempty(p) && p[0] % 2 == 1 && p.size() >= 2 && p[1] == p[0] - 1;
}

bool in_a(const Partition &p)
{
    return is_member(p, ClassId::D2) && p.contains(1);
}

bool in_b(const Partition &p)
{
    return in_shift_image(p) && p.contains(1);
}

bool in_c(const Partition &p)
{
    return ped_nonempty(p) && p[0] % 2 == 0 && !p.contains(1);
}

bool in_d(const Partition &p)
{
    return ped_nonempty(p) && p[0] % 2 == 1 && gap_below_largest(p) && !p.contains(1);
}

bool in_a_prime(const Partition &p)
{
    return in_a(p) && (p.multiplicity(1) == 2 || p[0] == 1);
}

bool in_b_prime(const Partition &p)
{
    const Part n = p.weight();
    if (n % 2 != 0 || n < 6 || p.size() < 2)
        return false;
    return p[0] == 3 && p[1] == 2 && p.multiplicity(1) == static_cast<std::size_t>(n - 5);
}

bool in_c_prime(const Partition &p)
{
    return in_c(p) && (p.size() == 1 || (p.size() == 2 && p[1] == 2));
}

bool in_d_prime(const Partition &p)
{
    return in_d(p) && (p.size() == 1 || p[1] == p[0] - 2);
}

} // namespace ped_sets

namespace pod_sets {

bool in_shift_image(const Partition &p)
{
    return pod_nonempty(p) && p[0] % 2 == 0 && p[0] >= 4 && p.size() >= 2 && p[1] == p[0] - 1;
}

bool in_a(const Partition &p)
{
    return is_member(p, ClassId::O2) && has_one_or_two(p);
}

bool in_b(const Partition &p)
{
    return in_shift_image(p) && has_one_or_two(p);
}

bool in_c(const Partition &p)
{
    return pod_nonempty(p) && p[0] % 2 == 1 && p.parts().back() >= 3;
}

bool in_d(const Partition &p)
{
    return pod_nonempty(p) && p[0] % 2 == 0 && gap_below_largest(p) && p.parts().back() >= 3;
}

} // namespace pod_sets

// ---------------------------------------------------------------- thm1

Partition b1_forward(const Partition &p)
{
    if (!is_member(p, ClassId::D1))
        reject("thm1.add", p, "is not in D1");
    auto v = copy_parts(p);
    ++v.front();
    return Partition::from_parts(v);
}

Partition b1_inverse(const Partition &p)
{
    if (!b1_image(p))
        reject("thm1.add inverse", p, "is not a PED partition with even largest part");
    auto v = copy_parts(p);
    --v.front();
    return Partition::from_parts(v);
}

// ---------------------------------------------------------------- thm2

Partition b2_shift_forward(const Partition &p)
{
    if (!is_member(p, ClassId::D2))
        reject("thm2.shift", p, "is not in D2");
    return Assembly().add(p[0] + 2).add(p[1] + 1).add(slice(p, 2)).in_order();
}

Partition b2_shift_inverse(const Partition &p)
{
    if (!ped_sets::in_shift_image(p))
        reject("thm2.shift inverse", p, "is not shaped (2l+1,2l,...) in PED");
    return Assembly().add(p[0] - 2).add(p[1] - 1).add(slice(p, 2)).in_order();
}

Partition b2_exchange_ca(const Partition &p)
{
    if (!ped_sets::in_c(p))
        reject("thm2.exchange.CA", p, "is not in C");
    if (ped_sets::in_c_prime(p))
        reject("thm2.exchange.CA", p, "is in the exceptional set C'");
    const Part top = p[0];
    const Part h = p[1];
    if (h % 2 == 1)
        return Assembly().add(h, 2).add(slice(p, 2)).add(1, top - h).in_order();
    return Assembly().add(h - 1, 2).add(slice(p, 2)).add(1, top - h + 2).in_order();
}

Partition b2_exchange_ca_inverse(const Partition &p)
{
    if (!ped_sets::in_a(p) || ped_sets::in_a_prime(p))
        reject("thm2.exchange.CA inverse", p, "is not in A\\A'");
    const Part top = p[0];
    const auto ones = static_cast<Part>(p.multiplicity(1));
    const auto tail = slice(p, 2, static_cast<std::size_t>(ones));
    if (ones % 2 == 1)
        return Assembly().add(top + ones).add(top).add(tail).in_order();
    return Assembly().add(ones + top - 1).add(top + 1).add(tail).in_order();
}

Partition b2_exchange_db(const Partition &p)
{
    if (!ped_sets::in_d(p))
        reject("thm2.exchange.DB", p, "is not in D");
    if (ped_sets::in_d_prime(p))
        reject("thm2.exchange.DB", p, "is in the exceptional set D'");
    const Part two_l = p[0] - 1;
    const Part h = p[1];
    if (h % 2 == 1)
        return Assembly().add(h + 2).add(h + 1).add(slice(p, 2)).add(1, two_l - h - 2).in_order();
    return Assembly().add(h + 1).add(h).add(slice(p, 2)).add(1, two_l - h).in_order();
}

Partition b2_exchange_db_inverse(const Partition &p)
{
    if (!ped_sets::in_b(p) || ped_sets::in_b_prime(p))
        reject("thm2.exchange.DB inverse", p, "is not in B\\B'");
    const Part two_m = p[1];
    const auto ones = static_cast<Part>(p.multiplicity(1));
    const auto tail = slice(p, 2, static_cast<std::size_t>(ones));
    if (ones % 2 == 1)
        return Assembly().add(ones + two_m + 2).add(two_m - 1).add(tail).in_order();
    return Assembly().add(ones + two_m + 1).add(two_m).add(tail).in_order();
}

Partition b2_exceptional(const Partition &p, Part n)
{
    if (p.weight() != n)
        reject("thm2.exceptional", p, "does not have weight " + std::to_string(n));
    if (!ped_sets::in_c_prime(p) && !ped_sets::in_d_prime(p))
        reject("thm2.exceptional", p, "is not in C' u D'");
    if (p.size() == 1)
        return Assembly().add(1, n).in_order();
    if (ped_sets::in_d(p)) {
        // (2l+1, 2l-1, tail) -> (2l-1, 2l-1, tail, 1, 1); the tail has no 1s
        return Assembly().add(p[1], 2).add(slice(p, 2)).add(1, 2).in_order();
    }
    // (n-2, 2), n even
    return Assembly().add(3).add(2).add(1, n - 5).in_order();
}

Partition b2_exceptional_inverse(const Partition &p, Part n)
{
    if (p.weight() != n)
        reject("thm2.exceptional inverse", p, "does not have weight " + std::to_string(n));
    if (!ped_sets::in_a_prime(p) && !ped_sets::in_b_prime(p))
        reject("thm2.exceptional inverse", p, "is not in A' u B'");
    if (p[0] == 1)
        return Assembly().add(n).in_order();
    if (ped_sets::in_b_prime(p))
        return Assembly().add(n - 2).add(2).in_order();
    return Assembly().add(p[0] + 2).add(p[0]).add(slice(p, 2, 2)).in_order();
}

TaggedPreimage b2_total(const Partition &p)
{
    if (!is_member(p, ClassId::PedGt1))
        reject("thm2.total", p, "is not in PED_GT1");
    const Part n = p.weight();
    if (is_member(p, ClassId::D2))
        return {SourceTag::Same, p};
    if (ped_sets::in_shift_image(p))
        return {SourceTag::Minus3, b2_shift_inverse(p)};
    if (ped_sets::in_c_prime(p) || ped_sets::in_d_prime(p)) {
        Partition image = b2_exceptional(p, n);
        if (ped_sets::in_b_prime(image))
            return {SourceTag::Minus3, b2_shift_inverse(image)};
        return {SourceTag::Same, image};
    }
    if (ped_sets::in_c(p))
        return {SourceTag::Same, b2_exchange_ca(p)};
    if (ped_sets::in_d(p))
        return {SourceTag::Minus3, b2_shift_inverse(b2_exchange_db(p))};
    throw std::logic_error("thm2.total: no case matched " + p.to_string());
}

Partition b2_total_inverse(const TaggedPreimage &t)
{
    const Partition &q = t.partition;
    if (!is_member(q, ClassId::D2))
        reject("thm2.total inverse", q, "is not in D2");
    if (t.source == SourceTag::Same) {
        if (!q.contains(1))
            return q;
        if (ped_sets::in_a_prime(q))
            return b2_exceptional_inverse(q, q.weight());
        return b2_exchange_ca_inverse(q);
    }
    Partition shifted = b2_shift_forward(q);
    if (!shifted.contains(1))
        return shifted;
    if (ped_sets::in_b_prime(shifted))
        return b2_exceptional_inverse(shifted, shifted.weight());
    return b2_exchange_db_inverse(shifted);
}

// ---------------------------------------------------------------- thm3

Partition b3_add(const Partition &p)
{
    if (!is_member(p, ClassId::D3))
        reject("thm3.add", p, "is not in D3");
    auto v = copy_parts(p);
    ++v.front();
    return Partition::from_parts(v);
}

Partition b3_add_inverse(const Partition &p)
{
    if (!b3_add_image(p))
        reject("thm3.add inverse", p, "is not shaped (2j,k,...) with k <= 2j-2 in PED");
    auto v = copy_parts(p);
    --v.front();
    return Partition::from_parts(v);
}

Partition b3_sub(const Partition &p)
{
    if (!is_member(p, ClassId::D3) || p[0] < 3)
        reject("thm3.sub", p, "is not in D3 with largest part >= 3");
    auto v = copy_parts(p);
    v.front() -= 2;
    return Partition::from_parts(v);
}

Partition b3_sub_inverse(const Partition &p)
{
    if (!b3_sub_image(p))
        reject("thm3.sub inverse", p, "is not a PED partition with odd largest part or shaped (2j,2j-1,...)");
    auto v = copy_parts(p);
    // odd largest part, or the odd part right below an even largest part
    v[p[0] % 2 == 1 ? 0 : 1] += 2;
    return Partition::from_parts(v);
}

// ---------------------------------------------------------------- thm4

Partition b4_forward(const Partition &p)
{
    if (!is_member(p, ClassId::O1))
        reject("thm4.add", p, "is not in O1");
    auto v = copy_parts(p);
    ++v.front();
    return Partition::from_parts(v);
}

Partition b4_inverse(const Partition &p)
{
    if (!b4_image(p))
        reject("thm4.add inverse", p, "is not a POD partition with odd largest part >= 3");
    auto v = copy_parts(p);
    --v.front();
    return Partition::from_parts(v);
}

// ---------------------------------------------------------------- thm5

Partition b5_shift_forward(const Partition &p)
{
    if (!is_member(p, ClassId::O2))
        reject("thm5.shift", p, "is not in O2");
    return Assembly().add(p[0] + 2).add(p[1] + 1).add(slice(p, 2)).in_order();
}

Partition b5_shift_inverse(const Partition &p)
{
    if (!pod_sets::in_shift_image(p))
        reject("thm5.shift inverse", p, "is not shaped (2l,2l-1,...) in POD");
    return Assembly().add(p[0] - 2).add(p[1] - 1).add(slice(p, 2)).in_order();
}

namespace {

/* Appends the tail, an optional single 1, and as many 2s as the weight
 * requires. The count of 2s is forced by weight conservation. */
Partition fill_with_twos(Part n, std::initializer_list<Part> head, std::span<const Part> tail, bool trailing_one)
{
    Assembly a;
    for (Part x : head)
        a.add(x);
    a.add(tail);
    const Part deficit = n - a.weight() - (trailing_one ? 1 : 0);
    if (deficit < 0 || deficit % 2 != 0)
        throw std::logic_error("thm5.exchange: filler count " + std::to_string(deficit) + "/2 is not a non-negative integer");
    a.add(2, deficit / 2);
    if (trailing_one)
        a.add(1);
    return a.in_order();
}

} // namespace

Partition b5_exchange(const Partition &p, Part n)
{
    if (p.weight() != n)
        reject("thm5.exchange", p, "does not have weight " + std::to_string(n));
    const bool from_c = pod_sets::in_c(p);
    if (!from_c && !pod_sets::in_d(p))
        reject("thm5.exchange", p, "is not in C u D");

    const Part top = p[0];
    // h = 0 stands for a missing second part
    const Part h = p.size() > 1 ? p[1] : 0;
    const auto tail = p.size() > 2 ? slice(p, 2) : std::span<const Part>{};

    if (from_c) {
        if (n % 2 == 0) {
            if (h == 0)
                throw std::logic_error("thm5.exchange: odd singleton at even weight");
            if (h % 2 == 0)
                return fill_with_twos(n, {h, h}, tail, true);
            if (h != 3)
                return fill_with_twos(n, {h - 1, h - 1}, tail, false);
            return fill_with_twos(n, {4, 3}, tail, true);
        }
        if (h == 0)
            return fill_with_twos(n, {}, {}, true);
        if (h % 2 == 0)
            return fill_with_twos(n, {h, h}, tail, true);
        return fill_with_twos(n, {h - 1, h - 1}, tail, false);
    }

    if (h == 0) {
        if (n % 2 != 0)
            throw std::logic_error("thm5.exchange: even singleton at odd weight");
        return fill_with_twos(n, {}, {}, false);
    }
    if (h % 2 == 1)
        return fill_with_twos(n, {h + 1, h}, tail, false);
    if (top - h != 2)
        return fill_with_twos(n, {h + 2, h + 1}, tail, true);
    return fill_with_twos(n, {h, h}, tail, false);
}

Partition b5_exchange_inverse(const Partition &p, Part n)
{
    if (p.weight() != n)
        reject("thm5.exchange inverse", p, "does not have weight " + std::to_string(n));
    const bool in_a = pod_sets::in_a(p);
    if (!in_a && !pod_sets::in_b(p))
        reject("thm5.exchange inverse", p, "is not in A u B");

    const Part top = p[0];
    const bool one = p.contains(1);
    const auto twos = static_cast<Part>(p.multiplicity(2));

    if (in_a && top == 2) {
        // (2,...,2) or (2,...,2,1)
        return Assembly().add(2 * twos + (one ? 1 : 0)).in_order();
    }
    const std::size_t fillers = static_cast<std::size_t>(twos) + (one ? 1 : 0);
    const auto tail = slice(p, 2, fillers);
    if (in_a) {
        if (one)
            return Assembly().add(top + 2 * twos + 1).add(top).add(tail).in_order();
        if (twos >= 2)
            return Assembly().add(2 * twos + top - 1).add(top + 1).add(tail).in_order();
        return Assembly().add(top + 2).add(top).add(tail).in_order();
    }
    if (one) {
        if (top == 4)
            return Assembly().add(2 * twos + 5).add(3).in_order();
        return Assembly().add(top + 2 + 2 * twos).add(top - 2).add(tail).in_order();
    }
    return Assembly().add(2 * twos + top).add(top - 1).add(tail).in_order();
}

TaggedPreimage b5_total(const Partition &p)
{
    if (!is_member(p, ClassId::PodGt2))
        reject("thm5.total", p, "is not in POD_GT2");
    if (is_member(p, ClassId::O2))
        return {SourceTag::Same, p};
    if (pod_sets::in_shift_image(p))
        return {SourceTag::Minus3, b5_shift_inverse(p)};
    if (pod_sets::in_c(p) || pod_sets::in_d(p)) {
        Partition image = b5_exchange(p, p.weight());
        if (pod_sets::in_a(image))
            return {SourceTag::Same, image};
        if (pod_sets::in_b(image))
            return {SourceTag::Minus3, b5_shift_inverse(image)};
        throw std::logic_error("thm5.total: exchange image " + image.to_string() + " is outside A u B");
    }
    throw std::logic_error("thm5.total: no case matched " + p.to_string());
}

Partition b5_total_inverse(const TaggedPreimage &t)
{
    const Partition &q = t.partition;
    if (!is_member(q, ClassId::O2))
        reject("thm5.total inverse", q, "is not in O2");
    const Partition target = t.source == SourceTag::Same ? q : b5_shift_forward(q);
    if (!has_one_or_two(target))
        return target;
    return b5_exchange_inverse(target, target.weight());
}

// ---------------------------------------------------------------- thm6

Partition b6_add(const Partition &p)
{
    if (!is_member(p, ClassId::O3))
        reject("thm6.add", p, "is not in O3");
    auto v = copy_parts(p);
    ++v.front();
    return Partition::from_parts(v);
}

Partition b6_add_inverse(const Partition &p)
{
    if (!b6_add_image(p))
        reject("thm6.add inverse", p, "is not shaped (2j+1,k,...) with k <= 2j-1 in POD");
    auto v = copy_parts(p);
    --v.front();
    return Partition::from_parts(v);
}

Partition b6_sub(const Partition &p)
{
    if (!is_member(p, ClassId::O3))
        reject("thm6.sub", p, "is not in O3");
    auto v = copy_parts(p);
    v.front() -= 2;
    if (v.front() == 0)
        v.erase(v.begin());
    return Partition::from_parts(v);
}

Partition b6_sub_inverse(const Partition &p)
{
    if (!b6_sub_image(p))
        reject("thm6.sub inverse", p, "lies in the image of thm6.add or outside POD");
    auto v = copy_parts(p);
    // raise the largest even part by 2; a missing even part counts as 0
    auto even = std::find_if(v.begin(), v.end(), [](Part x) { return x % 2 == 0; });
    if (even != v.end())
        *even += 2;
    else
        v.push_back(2);
    return Partition::from_parts(v);
}

// ---------------------------------------------------------------- dispatch

Part domain_weight(BijectionId id, Part n)
{
    return n + bijection_info(id).domain_offset;
}

Part codomain_weight(BijectionId id, SourceTag tag, Part n)
{
    return n + bijection_info(id).codomain_offset - (tag == SourceTag::Minus3 ? 3 : 0);
}

bool in_domain(BijectionId id, const Partition &p, Part n)
{
    if (p.weight() != domain_weight(id, n))
        return false;
    switch (id) {
    case BijectionId::B1:
        return is_member(p, ClassId::D1);
    case BijectionId::B2Shift:
        return is_member(p, ClassId::D2);
    case BijectionId::B2ExchangeCA:
        return ped_sets::in_c(p) && !ped_sets::in_c_prime(p);
    case BijectionId::B2ExchangeDB:
        return ped_sets::in_d(p) && !ped_sets::in_d_prime(p);
    case BijectionId::B2Exceptional:
        return ped_sets::in_c_prime(p) || ped_sets::in_d_prime(p);
    case BijectionId::B2Total:
        return is_member(p, ClassId::PedGt1);
    case BijectionId::B3Add:
        return is_member(p, ClassId::D3);
    case BijectionId::B3Sub:
        return is_member(p, ClassId::D3) && p[0] >= 3;
    case BijectionId::B4:
        return is_member(p, ClassId::O1);
    case BijectionId::B5Shift:
        return is_member(p, ClassId::O2);
    case BijectionId::B5Exchange:
        return pod_sets::in_c(p) || pod_sets::in_d(p);
    case BijectionId::B5Total:
        return is_member(p, ClassId::PodGt2);
    case BijectionId::B6Add:
    case BijectionId::B6Sub:
        return is_member(p, ClassId::O3);
    }
    return false;
}

bool in_codomain(BijectionId id, const TaggedPreimage &t, Part n)
{
    const BijectionInfo &info = bijection_info(id);
    if (!info.tagged && t.source != SourceTag::Same)
        return false;
    const Partition &p = t.partition;
    if (p.weight() != codomain_weight(id, t.source, n))
        return false;
    switch (id) {
    case BijectionId::B1:
        return b1_image(p);
    case BijectionId::B2Shift:
        return ped_sets::in_shift_image(p);
    case BijectionId::B2ExchangeCA:
        return ped_sets::in_a(p) && !ped_sets::in_a_prime(p);
    case BijectionId::B2ExchangeDB:
        return ped_sets::in_b(p) && !ped_sets::in_b_prime(p);
    case BijectionId::B2Exceptional:
        return ped_sets::in_a_prime(p) || ped_sets::in_b_prime(p);
    case BijectionId::B2Total:
        return is_member(p, ClassId::D2);
    case BijectionId::B3Add:
        return b3_add_image(p);
    case BijectionId::B3Sub:
        return b3_sub_image(p);
    case BijectionId::B4:
        return b4_image(p);
    case BijectionId::B5Shift:
        return pod_sets::in_shift_image(p);
    case BijectionId::B5Exchange:
        return pod_sets::in_a(p) || pod_sets::in_b(p);
    case BijectionId::B5Total:
        return is_member(p, ClassId::O2);
    case BijectionId::B6Add:
        return b6_add_image(p);
    case BijectionId::B6Sub:
        return b6_sub_image(p);
    }
    return false;
}

std::vector<Partition> enumerate_domain(BijectionId id, Part n)
{
    std::vector<Partition> out;
    const Part w = domain_weight(id, n);
    if (w < 0)
        return out;
    for (const Partition &p : partitions_of(w)) {
        if (in_domain(id, p, n))
            out.push_back(p);
    }
    return out;
}

std::vector<TaggedPreimage> enumerate_codomain(BijectionId id, Part n)
{
    std::vector<TaggedPreimage> out;
    const auto collect = [&](SourceTag tag) {
        const Part w = codomain_weight(id, tag, n);
        if (w < 0)
            return;
        for (const Partition &p : partitions_of(w)) {
            TaggedPreimage t{tag, p};
            if (in_codomain(id, t, n))
                out.push_back(std::move(t));
        }
    };
    collect(SourceTag::Same);
    if (bijection_info(id).tagged)
        collect(SourceTag::Minus3);
    return out;
}

TaggedPreimage apply_forward(BijectionId id, const Partition &p, Part n)
{
    if (!in_domain(id, p, n))
        reject(bijection_info(id).name, p, "is outside the domain at n=" + std::to_string(n));
    switch (id) {
    case BijectionId::B1:
        return {SourceTag::Same, b1_forward(p)};
    case BijectionId::B2Shift:
        return {SourceTag::Same, b2_shift_forward(p)};
    case BijectionId::B2ExchangeCA:
        return {SourceTag::Same, b2_exchange_ca(p)};
    case BijectionId::B2ExchangeDB:
        return {SourceTag::Same, b2_exchange_db(p)};
    case BijectionId::B2Exceptional:
        return {SourceTag::Same, b2_exceptional(p, n)};
    case BijectionId::B2Total:
        return b2_total(p);
    case BijectionId::B3Add:
        return {SourceTag::Same, b3_add(p)};
    case BijectionId::B3Sub:
        return {SourceTag::Same, b3_sub(p)};
    case BijectionId::B4:
        return {SourceTag::Same, b4_forward(p)};
    case BijectionId::B5Shift:
        return {SourceTag::Same, b5_shift_forward(p)};
    case BijectionId::B5Exchange:
        return {SourceTag::Same, b5_exchange(p, n)};
    case BijectionId::B5Total:
        return b5_total(p);
    case BijectionId::B6Add:
        return {SourceTag::Same, b6_add(p)};
    case BijectionId::B6Sub:
        return {SourceTag::Same, b6_sub(p)};
    }
    throw std::logic_error("unhandled bijection id");
}

Partition apply_inverse(BijectionId id, const TaggedPreimage &t, Part n)
{
    if (!in_codomain(id, t, n))
        reject(std::string(bijection_info(id).name) + " inverse", t.partition,
               "is outside the codomain at n=" + std::to_string(n));
    const Partition &p = t.partition;
    switch (id) {
    case BijectionId::B1:
        return b1_inverse(p);
    case BijectionId::B2Shift:
        return b2_shift_inverse(p);
    case BijectionId::B2ExchangeCA:
        return b2_exchange_ca_inverse(p);
    case BijectionId::B2ExchangeDB:
        return b2_exchange_db_inverse(p);
    case BijectionId::B2Exceptional:
        return b2_exceptional_inverse(p, n);
    case BijectionId::B2Total:
        return b2_total_inverse(t);
    case BijectionId::B3Add:
        return b3_add_inverse(p);
    case BijectionId::B3Sub:
        return b3_sub_inverse(p);
    case BijectionId::B4:
        return b4_inverse(p);
    case BijectionId::B5Shift:
        return b5_shift_inverse(p);
    case BijectionId::B5Exchange:
        return b5_exchange_inverse(p, n);
    case BijectionId::B5Total:
        return b5_total_inverse(t);
    case BijectionId::B6Add:
        return b6_add_inverse(p);
    case BijectionId::B6Sub:
        return b6_sub_inverse(p);
    }
    throw std::logic_error("unhandled bijection id");
}

Part reference_n_for_domain(BijectionId id, const Partition &p)
{
    return p.weight() - bijection_info(id).domain_offset;
}

Part reference_n_for_codomain(BijectionId id, const TaggedPreimage &t)
{
    return t.partition.weight() - bijection_info(id).codomain_offset + (t.source == SourceTag::Minus3 ? 3 : 0);
}

} // namespace pedpod
