#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <permtab/bijection.hpp>
#include <permtab/enumerate.hpp>
#include <permtab/io.hpp>
#include <permtab/verify.hpp>

using namespace permtab;

TEST_CASE("images of the bundled examples") {
    CHECK(xi(to_alternative(parse_tableau(golden::inv_one))) == Permutation{3, 2, 1});
    CHECK(xi(to_alternative(parse_tableau(golden::inv_two))) == Permutation{4, 5, 1, 3, 2});
    CHECK(xi(parse_alternative(golden::paths_alternative)) ==
          Permutation{3, 6, 5, 12, 7, 9, 10, 8, 4, 11, 2, 1});
    CHECK(xi(to_alternative(parse_tableau(golden::length11))) ==
          Permutation{6, 5, 9, 1, 4, 3, 2, 8, 10, 7, 11});
}

TEST_CASE("all-empty-rows tableaux map to the identity") {
    for (int n = 0; n <= 5; ++n) {
        const FerrersShape s(std::vector<int>(static_cast<std::size_t>(n), 0));
        const PermutationTableau t(s, std::vector<std::vector<std::uint8_t>>(static_cast<std::size_t>(n)));
        Permutation id(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
        CHECK(xi(to_alternative(t)) == id);
    }
}

TEST_CASE("is_permutation_of_n") {
    CHECK(is_permutation_of_n({}));
    CHECK(is_permutation_of_n({1}));
    CHECK(is_permutation_of_n({2, 1, 3}));
    CHECK_FALSE(is_permutation_of_n({2, 2, 3}));
    CHECK_FALSE(is_permutation_of_n({0, 1}));
    CHECK_FALSE(is_permutation_of_n({1, 3}));
}

TEST_CASE("descents of the image sit exactly at column labels") {
    for (int n = 0; n <= 6; ++n) {
        for_each_tableau(n, [&](const PermutationTableau& t) {
            const auto a = to_alternative(t);
            REQUIRE(descent_column_check(a));
            // spelled out: compare the descent set with the column-label set
            const Permutation pi = xi(a);
            const auto& lab = a.labeling();
            for (std::size_t i = 0; i + 1 < pi.size(); ++i)
                REQUIRE((pi[i] > pi[i + 1]) == lab.is_column_label(pi[i]));
        });
    }
}

TEST_CASE("the map reaches every permutation exactly once") {
    std::uint64_t factorial = 1;
    for (int n = 0; n <= 7; ++n) {
        if (n > 0) factorial *= static_cast<std::uint64_t>(n);
        std::set<Permutation> images;
        std::uint64_t total = 0;
        for_each_tableau(n, [&](const PermutationTableau& t) {
            ++total;
            const Permutation pi = xi(to_alternative(t));
            REQUIRE(is_permutation_of_n(pi));
            images.insert(pi);
        });
        REQUIRE(total == factorial);
        REQUIRE(images.size() == factorial);  // injective onto S_n
    }
}

TEST_CASE("path labels appear as a subsequence of the image") {
    for (int n = 0; n <= 5; ++n) {
        for_each_tableau(n, [&](const PermutationTableau& t) {
            const auto a = to_alternative(t);
            const Permutation pi = xi(a);
            std::vector<int> pos(pi.size() + 1, 0);
            for (std::size_t i = 0; i < pi.size(); ++i) pos[static_cast<std::size_t>(pi[i])] = static_cast<int>(i);
            for (int d : dot_labels(a)) {
                const auto p = alternating_path(a, d);
                for (std::size_t i = 0; i + 1 < p.labels.size(); ++i)
                    REQUIRE(pos[static_cast<std::size_t>(p.labels[i])] <
                            pos[static_cast<std::size_t>(p.labels[i + 1])]);
            }
        });
    }
}
