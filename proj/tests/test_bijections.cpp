#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "pedpod/bijections.hpp"
#include "pedpod/verification.hpp"

using namespace pedpod;

namespace {

Partition P(std::initializer_list<Part> parts)
{
    return Partition::from_parts(parts);
}

Partition ones(Part k)
{
    return Partition::from_parts(std::vector<Part>(static_cast<std::size_t>(k), 1));
}

std::set<Partition> oracle_class(Part n, ClassId c)
{
    std::set<Partition> out;
    if (n < 0)
        return out;
    for (const auto &raw : oracle::all_partitions(n)) {
        if (oracle::member(raw, c))
            out.insert(make_partition(raw));
    }
    return out;
}

} // namespace

TEST_CASE("bijection names")
{
    CHECK(bijection_info(BijectionId::B2ExchangeCA).name == "thm2.exchange.CA");
    for (BijectionId id : all_bijection_ids)
        CHECK(parse_bijection(bijection_info(id).name) == id);
    CHECK(parse_bijection("THM1.ADD") == BijectionId::B1);
    CHECK_THROWS_AS(parse_bijection("thm7.add"), std::invalid_argument);
}

TEST_CASE("declared weight shifts and reconstruction flags")
{
    CHECK(bijection_info(BijectionId::B1).weight_shift() == 1);
    CHECK(bijection_info(BijectionId::B2Shift).weight_shift() == 3);
    CHECK(bijection_info(BijectionId::B2ExchangeCA).weight_shift() == 0);
    CHECK(bijection_info(BijectionId::B3Add).weight_shift() == 1);
    CHECK(bijection_info(BijectionId::B3Sub).weight_shift() == -2);
    CHECK(bijection_info(BijectionId::B4).weight_shift() == 1);
    CHECK(bijection_info(BijectionId::B5Shift).weight_shift() == 3);
    CHECK(bijection_info(BijectionId::B6Add).weight_shift() == 1);
    CHECK(bijection_info(BijectionId::B6Sub).weight_shift() == -2);
    for (BijectionId id : all_bijection_ids) {
        const bool expected = id == BijectionId::B4 || id == BijectionId::B6Add || id == BijectionId::B6Sub;
        CHECK(bijection_info(id).reconstructed == expected);
    }
}

TEST_CASE("thm1.add examples")
{
    CHECK(b1_forward(P({3, 3, 2})) == P({4, 3, 2}));
    CHECK(b1_forward(P({1})) == P({2}));
    CHECK(b1_forward(P({5, 4, 1})) == P({6, 4, 1}));
    CHECK(b1_inverse(P({4, 3, 2})) == P({3, 3, 2}));
    CHECK_THROWS_AS(b1_forward(P({4, 1})), DomainError);
    CHECK_THROWS_AS(b1_forward(P({3, 2, 2})), DomainError);
    CHECK_THROWS_AS(b1_inverse(P({5})), DomainError);
}

TEST_CASE("thm2.shift examples")
{
    CHECK(b2_shift_forward(P({3, 3})) == P({5, 4}));
    CHECK(b2_shift_forward(P({1, 1, 1})) == P({3, 2, 1}));
    CHECK(b2_shift_forward(P({5, 5, 4, 1})) == P({7, 6, 4, 1}));
    CHECK(b2_shift_inverse(P({7, 6, 4, 1})) == P({5, 5, 4, 1}));
    CHECK_THROWS_AS(b2_shift_forward(P({3, 1})), DomainError);
    CHECK_THROWS_AS(b2_shift_inverse(P({5, 3})), DomainError);
}

TEST_CASE("thm2.exchange.CA examples")
{
    CHECK(b2_exchange_ca(P({6, 5})) == P({5, 5, 1}));
    CHECK(b2_exchange_ca(P({6, 4})) == P({3, 3, 1, 1, 1, 1}));
    CHECK(b2_exchange_ca(P({8, 3, 2})) == P({3, 3, 2, 1, 1, 1, 1, 1}));
    CHECK(b2_exchange_ca_inverse(P({3, 3, 2, 1, 1, 1, 1, 1})) == P({8, 3, 2}));
    // exceptional members are routed elsewhere
    CHECK_THROWS_AS(b2_exchange_ca(P({10})), DomainError);
    CHECK_THROWS_AS(b2_exchange_ca(P({10, 2})), DomainError);
    CHECK_THROWS_AS(b2_exchange_ca(P({6, 3, 1})), DomainError);
    CHECK_THROWS_AS(b2_exchange_ca_inverse(P({5, 5, 1, 1})), DomainError);
}

TEST_CASE("thm2.exchange.DB examples")
{
    CHECK(b2_exchange_db(P({7, 3})) == P({5, 4, 1}));
    CHECK(b2_exchange_db(P({7, 4})) == P({5, 4, 1, 1}));
    CHECK(b2_exchange_db(P({9, 5, 3})) == P({7, 6, 3, 1}));
    CHECK(b2_exchange_db_inverse(P({7, 6, 3, 1})) == P({9, 5, 3}));
    CHECK_THROWS_AS(b2_exchange_db(P({7, 5})), DomainError);
    CHECK_THROWS_AS(b2_exchange_db(P({9})), DomainError);
    CHECK_THROWS_AS(b2_exchange_db_inverse(P({3, 2, 1, 1, 1, 1, 1, 1, 1})), DomainError);
}

TEST_CASE("thm2.exceptional examples")
{
    CHECK(b2_exceptional(P({7}), 7) == ones(7));
    CHECK(b2_exceptional(P({7, 5}), 12) == P({5, 5, 1, 1}));
    CHECK(b2_exceptional(P({10, 2}), 12) == P({3, 2, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(b2_exceptional(P({8}), 8) == ones(8));
    CHECK(b2_exceptional_inverse(P({3, 2, 1, 1, 1, 1, 1, 1, 1}), 12) == P({10, 2}));
    CHECK(b2_exceptional_inverse(P({1, 1}), 2) == P({2}));
    CHECK_THROWS_AS(b2_exceptional(P({7, 5}), 13), DomainError);
    CHECK_THROWS_AS(b2_exceptional(P({6, 5}), 11), DomainError);
}

TEST_CASE("thm2.total examples")
{
    auto t = b2_total(P({3, 2}));
    CHECK(t.source == SourceTag::Minus3);
    CHECK(t.partition == P({1, 1}));

    t = b2_total(P({5, 5, 3}));
    CHECK(t.source == SourceTag::Same);
    CHECK(t.partition == P({5, 5, 3}));

    t = b2_total(P({6, 5}));
    CHECK(t.source == SourceTag::Same);
    CHECK(t.partition == P({5, 5, 1}));

    CHECK(b2_total_inverse({SourceTag::Minus3, P({1, 1})}) == P({3, 2}));
    CHECK_THROWS_AS(b2_total(P({3, 1, 1})), DomainError);
}

TEST_CASE("thm3 examples")
{
    CHECK(b3_add(P({5, 3, 2})) == P({6, 3, 2}));
    CHECK(b3_add(P({3})) == P({4}));
    CHECK(b3_add(P({7, 4, 1})) == P({8, 4, 1}));

    CHECK(b3_sub(P({7, 6, 3})) == P({6, 5, 3}));
    CHECK(b3_sub(P({7, 5, 2})) == P({5, 5, 2}));
    CHECK(b3_sub(P({9, 4, 3})) == P({7, 4, 3}));
    CHECK(b3_sub_inverse(P({6, 5, 3})) == P({7, 6, 3}));
    CHECK(b3_sub_inverse(P({5, 5, 2})) == P({7, 5, 2}));

    CHECK_THROWS_AS(b3_add(P({3, 3})), DomainError);
    CHECK_THROWS_AS(b3_sub(P({1})), DomainError);
    CHECK_THROWS_AS(b3_add_inverse(P({6, 5})), DomainError);
}

TEST_CASE("thm4.add examples")
{
    CHECK(b4_forward(P({4, 3})) == P({5, 3}));
    CHECK(b4_forward(P({2})) == P({3}));
    CHECK(b4_inverse(P({5, 3})) == P({4, 3}));
    CHECK_THROWS_AS(b4_forward(P({3, 1})), DomainError);
    CHECK_THROWS_AS(b4_inverse(P({1})), DomainError);
}

TEST_CASE("thm5.shift examples")
{
    CHECK(b5_shift_forward(P({2, 2, 1})) == P({4, 3, 1}));
    CHECK(b5_shift_forward(P({4, 4, 3})) == P({6, 5, 3}));
    CHECK(b5_shift_forward(P({2, 2})) == P({4, 3}));
    CHECK(b5_shift_inverse(P({4, 3})) == P({2, 2}));
    CHECK_THROWS_AS(b5_shift_forward(P({4, 3})), DomainError);
    CHECK_THROWS_AS(b5_shift_inverse(P({2, 1})), DomainError);
}

TEST_CASE("thm5.exchange examples")
{
    CHECK(b5_exchange(P({7, 4, 3}), 14) == P({4, 4, 3, 2, 1}));
    CHECK(b5_exchange(P({8, 5, 3}), 16) == P({6, 5, 3, 2}));
    CHECK(b5_exchange(P({9}), 9) == P({2, 2, 2, 2, 1}));
    CHECK(b5_exchange(P({5, 4}), 9) == P({4, 4, 1}));
    // even n, h = 3
    CHECK(b5_exchange(P({9, 3}), 12) == P({4, 3, 2, 2, 1}));
    // even singleton
    CHECK(b5_exchange(P({8}), 8) == P({2, 2, 2, 2}));
    // 2l - h = 2
    CHECK(b5_exchange(P({6, 4}), 10) == P({4, 4, 2}));
    CHECK(b5_exchange_inverse(P({4, 4, 3, 2, 1}), 14) == P({7, 4, 3}));
    CHECK(b5_exchange_inverse(P({4, 3, 2, 2, 1}), 12) == P({9, 3}));

    CHECK_THROWS_AS(b5_exchange(P({7, 4, 3}), 15), DomainError);
    CHECK_THROWS_AS(b5_exchange(P({7, 4, 2}), 13), DomainError);
    CHECK_THROWS_AS(b5_exchange(P({6, 5}), 11), DomainError);
}

TEST_CASE("thm5.total examples")
{
    auto t = b5_total(P({5}));
    CHECK(t.source == SourceTag::Same);
    CHECK(t.partition == P({2, 2, 1}));

    t = b5_total(P({4, 3}));
    CHECK(t.source == SourceTag::Minus3);
    CHECK(t.partition == P({2, 2}));

    t = b5_total(P({7}));
    CHECK(t.source == SourceTag::Same);
    CHECK(t.partition == P({2, 2, 2, 1}));

    CHECK(b5_total_inverse({SourceTag::Same, P({2, 2, 2, 1})}) == P({7}));
    CHECK_THROWS_AS(b5_total(P({4, 2})), DomainError);
}

TEST_CASE("thm5.exchange fails at n = 3, below its threshold")
{
    // (3) -> (2,1), which is not in O2(3)
    CHECK(b5_exchange(P({3}), 3) == P({2, 1}));
    CHECK_FALSE(in_codomain(BijectionId::B5Exchange, {SourceTag::Same, P({2, 1})}, 3));
    CHECK_THROWS_AS(b5_total(P({3})), std::logic_error);
    CHECK(bijection_info(BijectionId::B5Exchange).min_n == 5);
    CHECK(bijection_info(BijectionId::B5Total).min_n == 5);
}

TEST_CASE("thm6 examples")
{
    CHECK(b6_add(P({4, 3})) == P({5, 3}));
    CHECK(b6_add(P({2})) == P({3}));
    CHECK(b6_sub(P({8, 7, 2})) == P({7, 6, 2}));
    CHECK(b6_sub(P({6, 3})) == P({4, 3}));
    CHECK(b6_sub(P({2, 1})) == P({1}));
    CHECK(b6_sub(P({2})) == Partition{});
    CHECK(b6_sub_inverse(P({7, 6, 2})) == P({8, 7, 2}));
    CHECK(b6_sub_inverse(P({1})) == P({2, 1}));
    CHECK(b6_sub_inverse(Partition{}) == P({2}));
    CHECK_THROWS_AS(b6_add(P({4, 4})), DomainError);
    CHECK_THROWS_AS(b6_sub_inverse(P({5, 3})), DomainError);
}

TEST_CASE("o3(12) + o3(9) = pod(10) through the thm6 maps")
{
    const auto add_domain = enumerate_domain(BijectionId::B6Add, 10);
    const auto sub_domain = enumerate_domain(BijectionId::B6Sub, 10);
    CHECK(sub_domain.size() == 11);
    CHECK(add_domain.size() == 5);
    std::set<Partition> images;
    for (const auto &p : add_domain)
        images.insert(b6_add(p));
    for (const auto &p : sub_domain)
        images.insert(b6_sub(p));
    CHECK(images == oracle_class(10, ClassId::Pod));
}

TEST_CASE("every bijection passes its exhaustive audit for n <= 30")
{
    for (BijectionId id : all_bijection_ids) {
        for (Part n = 0; n <= 30; ++n) {
            auto report = audit_bijection(id, n);
            const auto &row = report.bijection_rows.front();
            CHECK_MESSAGE(report.pass, bijection_info(id).name << " n=" << n);
            if (n >= bijection_info(id).min_n) {
                CHECK_MESSAGE(row.pass(), bijection_info(id).name << " n=" << n);
                CHECK(row.domain_size == row.codomain_size);
            }
        }
    }
}

TEST_CASE("add/sub images tile PED(n) and POD(n) disjointly")
{
    for (Part n = 1; n <= 30; ++n) {
        std::multiset<Partition> ped;
        for (const auto &raw : oracle::all_partitions(n - 1))
            if (oracle::member(raw, ClassId::D3))
                ped.insert(b3_add(make_partition(raw)));
        for (const auto &raw : oracle::all_partitions(n + 2))
            if (oracle::member(raw, ClassId::D3))
                ped.insert(b3_sub(make_partition(raw)));
        const auto expected = oracle_class(n, ClassId::Ped);
        CHECK(ped.size() == expected.size());
        CHECK(std::set<Partition>(ped.begin(), ped.end()) == expected);

        // thm1: D1(n) itself plus the shifted D1(n-1)
        std::multiset<Partition> ped1;
        for (const auto &p : oracle_class(n, ClassId::D1))
            ped1.insert(p);
        for (const auto &p : oracle_class(n - 1, ClassId::D1))
            ped1.insert(b1_forward(p));
        CHECK(ped1.size() == expected.size());
        CHECK(std::set<Partition>(ped1.begin(), ped1.end()) == expected);

        if (n >= 3) {
            std::multiset<Partition> pod;
            for (const auto &p : oracle_class(n - 1, ClassId::O3))
                pod.insert(b6_add(p));
            for (const auto &p : oracle_class(n + 2, ClassId::O3))
                pod.insert(b6_sub(p));
            const auto expected_pod = oracle_class(n, ClassId::Pod);
            CHECK(pod.size() == expected_pod.size());
            CHECK(std::set<Partition>(pod.begin(), pod.end()) == expected_pod);
        }
        if (n >= 2) {
            std::multiset<Partition> pod;
            for (const auto &p : oracle_class(n, ClassId::O1))
                pod.insert(p);
            for (const auto &p : oracle_class(n - 1, ClassId::O1))
                pod.insert(b4_forward(p));
            const auto expected_pod = oracle_class(n, ClassId::Pod);
            CHECK(pod.size() == expected_pod.size());
            CHECK(std::set<Partition>(pod.begin(), pod.end()) == expected_pod);
        }
    }
}

TEST_CASE("total maps bucket into the two summands")
{
    for (Part n = 5; n <= 30; ++n) {
        std::set<Partition> same2, minus2, same5, minus5;
        for (const auto &p : oracle_class(n, ClassId::PedGt1)) {
            auto t = b2_total(p);
            CHECK((t.source == SourceTag::Same ? same2 : minus2).insert(t.partition).second);
        }
        for (const auto &p : oracle_class(n, ClassId::PodGt2)) {
            auto t = b5_total(p);
            CHECK((t.source == SourceTag::Same ? same5 : minus5).insert(t.partition).second);
        }
        CHECK(same2 == oracle_class(n, ClassId::D2));
        CHECK(minus2 == oracle_class(n - 3, ClassId::D2));
        CHECK(same5 == oracle_class(n, ClassId::O2));
        CHECK(minus5 == oracle_class(n - 3, ClassId::O2));
    }
}

TEST_CASE("property: random round trips beyond the exhaustive range")
{
    std::mt19937_64 rng(20241016);
    std::uniform_int_distribution<Part> weight(31, 80);
    std::size_t hits = 0;
    for (int trial = 0; trial < 40000; ++trial) {
        const Partition p = make_partition(oracle::random_parts(weight(rng), rng));
        for (BijectionId id : all_bijection_ids) {
            const Part n = reference_n_for_domain(id, p);
            if (n < bijection_info(id).min_n)
                continue;
            if (in_domain(id, p, n)) {
                ++hits;
                const TaggedPreimage y = apply_forward(id, p, n);
                CHECK(in_codomain(id, y, n));
                CHECK(apply_inverse(id, y, n) == p);
            } else {
                CHECK_THROWS_AS(apply_forward(id, p, n), DomainError);
            }
            for (SourceTag tag : {SourceTag::Same, SourceTag::Minus3}) {
                const TaggedPreimage t{tag, p};
                const Part m = reference_n_for_codomain(id, t);
                if (m < bijection_info(id).min_n || !in_codomain(id, t, m))
                    continue;
                ++hits;
                const Partition x = apply_inverse(id, t, m);
                CHECK(in_domain(id, x, m));
                CHECK(apply_forward(id, x, m) == t);
            }
        }
    }
    CHECK(hits > 1000);
}
