#include "pedpod/verification.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <future>
#include <map>
#include <set>

#include "pedpod/enumeration.hpp"

namespace pedpod {

namespace {

constexpr std::array<IdentitySpec, 6> identity_specs = {{
    {IdentityId::T1, "T1", {{ClassId::D1, 0}, {ClassId::D1, -1}}, {ClassId::Ped, 0}, 1},
    {IdentityId::T2, "T2", {{ClassId::D2, 0}, {ClassId::D2, -3}}, {ClassId::PedGt1, 0}, 1},
    {IdentityId::T3, "T3", {{ClassId::D3, 2}, {ClassId::D3, -1}}, {ClassId::Ped, 0}, 1},
    {IdentityId::T4, "T4", {{ClassId::O1, 0}, {ClassId::O1, -1}}, {ClassId::Pod, 0}, 2},
    {IdentityId::T5, "T5", {{ClassId::O2, 0}, {ClassId::O2, -3}}, {ClassId::PodGt2, 0}, 5},
    {IdentityId::T6, "T6", {{ClassId::O3, 2}, {ClassId::O3, -1}}, {ClassId::Pod, 0}, 3},
}};

void check_range(Part n_lo, Part n_hi)
{
    if (n_lo < 0 || n_hi < n_lo)
        throw std::invalid_argument("invalid range [" + std::to_string(n_lo) + ", " + std::to_string(n_hi) + "]");
}

BigInt lookup(const CountTable &t, Part n)
{
    if (n < 0)
        return 0;
    return t.counts.at(static_cast<std::size_t>(n));
}

std::string describe(const TaggedPreimage &t, BijectionId id)
{
    if (!bijection_info(id).tagged)
        return t.partition.to_string();
    const ClassId cls = id == BijectionId::B5Total ? ClassId::O2 : ClassId::D2;
    return std::string(source_tag_name(t.source, cls)) + " " + t.partition.to_string();
}

} // namespace

void AuditReport::add_counterexample(Counterexample c)
{
    if (counterexamples.size() < max_counterexamples)
        counterexamples.push_back(std::move(c));
    else
        ++counterexamples_dropped;
}

void AuditReport::merge(AuditReport other)
{
    pass = pass && other.pass;
    reconstructed = reconstructed || other.reconstructed;
    auto append = [](auto &into, auto &from) {
        into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
    };
    append(identity_rows, other.identity_rows);
    append(bijection_rows, other.bijection_rows);
    append(comparison_rows, other.comparison_rows);
    append(structure_rows, other.structure_rows);
    for (auto &c : other.counterexamples)
        add_counterexample(std::move(c));
    counterexamples_dropped += other.counterexamples_dropped;
}

const IdentitySpec &identity_spec(IdentityId id)
{
    return identity_specs[static_cast<std::size_t>(id)];
}

IdentityId parse_identity(std::string_view name)
{
    std::string upper;
    for (char c : name)
        upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (const auto &s : identity_specs) {
        if (s.name == upper)
            return s.id;
    }
    throw std::invalid_argument("unknown identity \"" + std::string(name) + "\"");
}

AuditReport verify_identity(IdentityId id, Part n_lo, Part n_hi, Backend backend)
{
    check_range(n_lo, n_hi);
    const IdentitySpec &spec = identity_spec(id);
    const Part reach = n_hi + std::max({spec.lhs[0].offset, spec.lhs[1].offset, spec.rhs.offset, Part{0}});

    const CountTable first = count_table(spec.lhs[0].cls, reach, backend);
    const CountTable second = spec.lhs[1].cls == spec.lhs[0].cls ? first : count_table(spec.lhs[1].cls, reach, backend);
    const CountTable right = count_table(spec.rhs.cls, reach, backend);

    AuditReport report;
    report.subject = std::string(spec.name);
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.backend = backend;
    for (Part n = n_lo; n <= n_hi; ++n) {
        IdentityRow row;
        row.n = n;
        row.lhs_first = lookup(first, n + spec.lhs[0].offset);
        row.lhs_second = lookup(second, n + spec.lhs[1].offset);
        row.rhs = lookup(right, n + spec.rhs.offset);
        row.pass = row.lhs_first + row.lhs_second == row.rhs;
        row.informational = n < spec.threshold;
        if (!row.pass && !row.informational) {
            report.pass = false;
            report.add_counterexample({n, "identity",
                                       row.lhs_first.get_str() + " + " + row.lhs_second.get_str() +
                                           " != " + row.rhs.get_str()});
        }
        report.identity_rows.push_back(std::move(row));
    }
    return report;
}

AuditReport audit_bijection(BijectionId id, Part n)
{
    const BijectionInfo &info = bijection_info(id);
    AuditReport report;
    report.subject = std::string(info.name);
    report.n_lo = report.n_hi = n;
    report.reconstructed = info.reconstructed;

    BijectionRow row;
    row.n = n;
    row.informational = n < info.min_n;

    const auto fail = [&](bool &flag, std::string property, std::string detail) {
        flag = false;
        report.add_counterexample({n, std::move(property), std::move(detail)});
    };

    const std::vector<Partition> domain = enumerate_domain(id, n);
    const std::vector<TaggedPreimage> codomain = enumerate_codomain(id, n);
    row.domain_size = domain.size();
    row.codomain_size = codomain.size();

    std::set<TaggedPreimage> images;
    for (const Partition &x : domain) {
        TaggedPreimage y;
        try {
            y = apply_forward(id, x, n);
        } catch (const std::exception &e) {
            fail(row.total, "total", x.to_string() + ": " + e.what());
            continue;
        }
        if (y.partition.weight() != codomain_weight(id, y.source, n))
            fail(row.weight_ok, "weight_shift", x.to_string() + " -> " + describe(y, id));
        if (!in_codomain(id, y, n))
            fail(row.into, "into", x.to_string() + " -> " + describe(y, id));
        if (!images.insert(y).second)
            fail(row.injective, "injective", "second preimage " + x.to_string() + " of " + describe(y, id));
        try {
            Partition back = apply_inverse(id, y, n);
            if (back != x)
                fail(row.round_trip, "round_trip",
                     x.to_string() + " -> " + describe(y, id) + " -> " + back.to_string());
        } catch (const std::exception &e) {
            fail(row.round_trip, "round_trip", x.to_string() + " -> " + describe(y, id) + ": " + e.what());
        }
    }

    for (const TaggedPreimage &y : codomain) {
        if (!images.contains(y))
            fail(row.surjective, "surjective", describe(y, id) + " has no preimage");
        try {
            Partition x = apply_inverse(id, y, n);
            if (!in_domain(id, x, n) || apply_forward(id, x, n) != y)
                fail(row.round_trip, "round_trip", describe(y, id) + " <- " + x.to_string());
        } catch (const std::exception &e) {
            fail(row.round_trip, "round_trip", describe(y, id) + ": " + e.what());
        }
    }

    report.pass = row.pass() || row.informational;
    report.bijection_rows.push_back(row);
    return report;
}

AuditReport audit_bijection(BijectionId id, Part n_lo, Part n_hi)
{
    check_range(n_lo, n_hi);
    std::vector<std::future<AuditReport>> pending;
    for (Part n = n_lo; n <= n_hi; ++n)
        pending.push_back(std::async(std::launch::async, [id, n] { return audit_bijection(id, n); }));

    AuditReport report;
    report.subject = std::string(bijection_info(id).name);
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.reconstructed = bijection_info(id).reconstructed;
    for (auto &f : pending)
        report.merge(f.get());
    return report;
}

AuditReport cross_check_counts(Part n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("cross_check_counts: n_max must be non-negative");
    AuditReport report;
    report.subject = "crosscheck";
    report.n_hi = n_max;

    const auto compare = [&](std::string check, ClassId cls, const CountTable &left, const CountTable &right, Part hi) {
        for (Part n = 0; n <= hi; ++n) {
            ComparisonRow row{check, cls, n, lookup(left, n), lookup(right, n), false};
            row.pass = row.left == row.right;
            if (!row.pass) {
                report.pass = false;
                report.add_counterexample({n, check + " " + std::string(class_name(cls)),
                                           row.left.get_str() + " != " + row.right.get_str()});
            }
            report.comparison_rows.push_back(std::move(row));
        }
    };

    const Part enum_hi = std::min(n_max, cross_check_enum_limit);
    std::map<ClassId, CountTable> dp;
    for (ClassId c : all_class_ids)
        dp.emplace(c, count_table(c, n_max, Backend::Dp));

    for (ClassId c : all_class_ids)
        compare("enum=dp", c, count_table(c, enum_hi, Backend::Enum), dp.at(c), enum_hi);
    for (ClassId c : all_class_ids) {
        if (series_spec_for(c, 0))
            compare("dp=series", c, dp.at(c), count_table(c, n_max, Backend::Series), n_max);
    }

    CountTable four_regular{ClassId::FourRegular, n_max, Backend::Dp, {}};
    for (Part n = 0; n <= n_max; ++n)
        four_regular.counts.push_back(four_regular_count(n));
    compare("ped=four_regular", ClassId::Ped, dp.at(ClassId::Ped), four_regular, n_max);
    return report;
}

AuditReport thm2_structure_check(Part n_lo, Part n_hi)
{
    check_range(n_lo, n_hi);
    AuditReport report;
    report.subject = "thm2.structure";
    report.n_lo = n_lo;
    report.n_hi = n_hi;

    for (Part n = n_lo; n <= n_hi; ++n) {
        StructureRow row;
        row.n = n;
        for (const Partition &p : partitions_of(n)) {
            if (!is_member(p, ClassId::Ped))
                continue;
            const bool a = ped_sets::in_a(p), b = ped_sets::in_b(p), c = ped_sets::in_c(p), d = ped_sets::in_d(p);
            const bool ap = ped_sets::in_a_prime(p), bp = ped_sets::in_b_prime(p);
            const bool cp = ped_sets::in_c_prime(p), dp = ped_sets::in_d_prime(p);
            row.a += a;
            row.b += b;
            row.c += c;
            row.d += d;
            row.a_prime += ap;
            row.b_prime += bp;
            row.c_prime += cp;
            row.d_prime += dp;
            const int shapes = int(a) + int(b) + int(c) + int(d);
            const bool nested = (!ap || a) && (!bp || b) && (!cp || c) && (!dp || d);
            if (shapes > 1 || !nested) {
                row.disjoint = false;
                report.add_counterexample({n, "disjoint", p.to_string() + " lies in overlapping shape sets"});
            }
        }
        row.cardinality = row.c + row.d == row.a + row.b;
        if (!row.cardinality)
            report.add_counterexample({n, "cardinality", "|C|+|D| = " + std::to_string(row.c + row.d) +
                                                             ", |A|+|B| = " + std::to_string(row.a + row.b)});

        const auto exchange_ok = [&](BijectionId id) {
            AuditReport sub = audit_bijection(id, n);
            const bool ok = sub.bijection_rows.front().pass();
            for (auto &c : sub.counterexamples)
                report.add_counterexample(std::move(c));
            return ok;
        };
        row.ca_bijective = exchange_ok(BijectionId::B2ExchangeCA);
        row.db_bijective = exchange_ok(BijectionId::B2ExchangeDB);
        row.exceptional_bijective = exchange_ok(BijectionId::B2Exceptional);

        report.pass = report.pass && row.pass();
        report.structure_rows.push_back(row);
    }
    return report;
}

} // namespace pedpod
