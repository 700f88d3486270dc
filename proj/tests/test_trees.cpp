#include "assoc/trees.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace assoc;

namespace {

// Parents of x_2..x_n as 1-based indices, matching how the trees are drawn.
DfsTree make_tree(const std::vector<int>& parents_1based) {
    std::vector<int> parents(parents_1based.size() + 1, -1);
    for (std::size_t i = 0; i < parents_1based.size(); ++i)
        parents[i + 1] = parents_1based[i] - 1;
    return DfsTree(std::move(parents));
}

// Independent check of the defining property: the descendants of every
// vertex (inclusive) form a contiguous index interval starting at it.
bool intervals_ok(const DfsTree& t) {
    const int n = t.size();
    std::vector<std::set<int>> desc(n);
    for (int v = n - 1; v >= 0; --v) {
        desc[v].insert(v);
        for (int w = 1; w < n; ++w)
            if (t.parent_of(w) == v) desc[v].insert(desc[w].begin(), desc[w].end());
    }
    for (int v = 0; v < n; ++v) {
        const int lo = *desc[v].begin();
        const int hi = *desc[v].rbegin();
        if (lo != v) return false;
        if (hi - lo + 1 != static_cast<int>(desc[v].size())) return false;
    }
    return true;
}

const char* kFigure1Term = "((x1((x2x3)x4))x5)(x6(x7x8))";
const std::vector<int> kFigure1Parents = {1, 2, 2, 1, 1, 6, 7};  // of x_2..x_8

ZagSequence chain_zag(int n) {
    ZagSequence z(n);
    for (int i = 0; i < n; ++i) z[i] = i;
    return z;
}

ZagSequence star_zag(int n) {
    ZagSequence z(n, 1);
    z[0] = 0;
    return z;
}

}  // namespace

TEST_CASE("parse_bracketing accepts the canonical syntax") {
    CHECK(format_bracketing(parse_bracketing("(x1x2)x3")) == "(x1x2)x3");
    CHECK(format_bracketing(parse_bracketing("x1(x2x3)")) == "x1(x2x3)");
    CHECK(format_bracketing(parse_bracketing("x1")) == "x1");
    CHECK(format_bracketing(parse_bracketing("x1x2")) == "x1x2");
    // Fully parenthesized and whitespace-littered inputs re-render canonically.
    CHECK(format_bracketing(parse_bracketing("((x1x2)x3)")) == "(x1x2)x3");
    CHECK(format_bracketing(parse_bracketing(" ( x1 x2 ) x3 ")) == "(x1x2)x3");
    CHECK(format_bracketing(parse_bracketing(kFigure1Term)) == kFigure1Term);

    const Bracketing t = parse_bracketing("(x1x2)x3");
    CHECK(t.size() == 3);
    CHECK_FALSE(t.node(t.root()).is_leaf());
}

TEST_CASE("parse_bracketing rejects bad input") {
    CHECK_THROWS_AS(parse_bracketing("(x1x3)x2"), ParseError);  // out of order
    CHECK_THROWS_AS(parse_bracketing("(x1x2)x4"), ParseError);  // gap
    CHECK_THROWS_AS(parse_bracketing("(x2x3)x1"), ParseError);
    CHECK_THROWS_AS(parse_bracketing("x1x2x3"), ParseError);    // missing parens
    CHECK_THROWS_AS(parse_bracketing("(x1x2"), ParseError);
    CHECK_THROWS_AS(parse_bracketing("x1)"), ParseError);
    CHECK_THROWS_AS(parse_bracketing(""), ParseError);
    CHECK_THROWS_AS(parse_bracketing("x0"), ParseError);
    CHECK_THROWS_AS(parse_bracketing("(x1 y2)"), ParseError);

    try {
        parse_bracketing("(x1x2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);  // offset of the missing ')'
    }
}

TEST_CASE("bracketing_to_dfs matches the associativity-pair drawings") {
    const DfsTree right = bracketing_to_dfs(parse_bracketing("x1(x2x3)"));
    CHECK(right == make_tree({1, 2}));
    CHECK(depth_sequence(right) == ZagSequence{0, 1, 2});

    const DfsTree left = bracketing_to_dfs(parse_bracketing("(x1x2)x3"));
    CHECK(left == make_tree({1, 1}));
    CHECK(depth_sequence(left) == ZagSequence{0, 1, 1});
}

TEST_CASE("the eight-leaf example tree") {
    const DfsTree t = bracketing_to_dfs(parse_bracketing(kFigure1Term));
    CHECK(t == make_tree(kFigure1Parents));
    CHECK(depth_sequence(t) == ZagSequence{0, 1, 2, 2, 1, 1, 2, 3});
    CHECK(dfs_to_dyck(t).steps == "UUDUDDUDUUUDDD");
    CHECK(format_bracketing(dfs_to_bracketing(t)) == kFigure1Term);
    CHECK(dyck_to_dfs(DyckPath{"UUDUDDUDUUUDDD"}) == t);
}

TEST_CASE("dfs_to_bracketing inverts the small examples") {
    CHECK(format_bracketing(dfs_to_bracketing(make_tree({1, 1}))) == "(x1x2)x3");
    CHECK(format_bracketing(dfs_to_bracketing(make_tree({1, 2}))) == "x1(x2x3)");
}

TEST_CASE("zag sequence conversions") {
    CHECK(zag_to_dfs({0, 1, 2, 3}) == make_tree({1, 2, 3}));  // strictly rising = chain
    CHECK(zag_to_dfs({0, 1, 2, 1}) == make_tree({1, 2, 1}));
    CHECK(depth_sequence(zag_to_dfs({0, 1, 2, 1})) == ZagSequence{0, 1, 2, 1});
    CHECK(zag_to_dfs({0}) == DfsTree({-1}));

    CHECK_FALSE(is_zag_sequence({1}));
    CHECK_FALSE(is_zag_sequence({0, 2}));
    CHECK_FALSE(is_zag_sequence({0, 1, 0}));
    CHECK_FALSE(is_zag_sequence({0, 1, 3}));
    CHECK_THROWS_AS(zag_to_dfs({0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(zag_to_dfs({0, 1, 0}), std::invalid_argument);

    CHECK(zag_to_string({0, 1, 2, 1}) == "0,1,2,1");
}

TEST_CASE("(0,1,2,1) is the unique tree with those depths") {
    // Exhaustive oracle over all five trees of size 4.
    int hits = 0;
    DfsTreeEnumerator trees(4);
    while (auto t = trees.next()) {
        if (depth_sequence(*t) == ZagSequence{0, 1, 2, 1}) {
            ++hits;
            CHECK(*t == make_tree({1, 2, 1}));
        }
    }
    CHECK(hits == 1);
}

TEST_CASE("Dyck path conversions") {
    CHECK(dfs_to_dyck(make_tree({1})).steps == "UD");
    CHECK(dyck_to_dfs(DyckPath{"UUDD"}) == make_tree({1, 2}));
    CHECK(dyck_to_dfs(DyckPath{""}) == DfsTree({-1}));

    CHECK_THROWS_AS(dyck_to_dfs(DyckPath{"UDD"}), ParseError);   // odd length
    CHECK_THROWS_AS(dyck_to_dfs(DyckPath{"DU"}), ParseError);    // dips below axis
    CHECK_THROWS_AS(dyck_to_dfs(DyckPath{"UDDU"}), ParseError);
    CHECK_THROWS_AS(dyck_to_dfs(DyckPath{"UUUU"}), ParseError);  // unbalanced
    CHECK_THROWS_AS(dyck_to_dfs(DyckPath{"UX"}), ParseError);
}

TEST_CASE("UUDD is the only size-3 path without mid-path backtracking") {
    DfsTreeEnumerator trees(3);
    std::vector<std::string> paths;
    while (auto t = trees.next()) paths.push_back(dfs_to_dyck(*t).steps);
    CHECK(paths == std::vector<std::string>{"UDUD", "UUDD"});
}

TEST_CASE("enumeration is lexicographic in the zag sequences") {
    DfsTreeEnumerator small(3);
    std::vector<ZagSequence> zags;
    while (auto t = small.next()) zags.push_back(depth_sequence(*t));
    CHECK(zags == std::vector<ZagSequence>{{0, 1, 1}, {0, 1, 2}});

    DfsTreeEnumerator four(4);
    zags.clear();
    while (four.next()) zags.push_back(four.zag());
    CHECK(zags == std::vector<ZagSequence>{
                      {0, 1, 1, 1}, {0, 1, 1, 2}, {0, 1, 2, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}});
    CHECK(std::is_sorted(zags.begin(), zags.end()));
}

TEST_CASE("enumeration counts match the Catalan numbers") {
    for (int n = 1; n <= 8; ++n) {
        std::uint64_t count = 0;
        DfsTreeEnumerator trees(n);
        while (trees.next()) ++count;
        CHECK(mpz_class(static_cast<unsigned long>(count)) == catalan(n - 1));
    }
    CHECK(catalan(7) == 429);  // 429 trees at n = 8
}

TEST_CASE("catalan values and recurrence") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(2) == 2);
    CHECK(catalan(11) == 58786);
    // C_k = C_{k-1} * 2(2k-1)/(k+1), exercised beyond 64 bits.
    mpz_class prev = 1;
    for (unsigned long k = 1; k <= 40; ++k) {
        mpz_class expect = prev * (2 * (2 * k - 1));
        expect /= (k + 1);
        CHECK(catalan(k) == expect);
        prev = expect;
    }
    CHECK(catalan(40) > mpz_class("18446744073709551615"));  // past 2^64
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(DfsTreeEnumerator(15, kDefaultTreeCap), BudgetError);  // C_14 ~ 2.7M
    CHECK_NOTHROW(DfsTreeEnumerator(15, 3'000'000));
    CHECK_THROWS_AS(DfsTreeEnumerator(4, 3), BudgetError);
}

TEST_CASE("DfsTree validation") {
    CHECK_THROWS_AS(DfsTree({-1, 0, 0, 1}), std::invalid_argument);  // x4 under x2 after x3 closed
    CHECK_THROWS_AS(DfsTree({-1, 1}), std::invalid_argument);        // parent not before child
    CHECK_NOTHROW(DfsTree({-1, 0, 1, 0}));
}

TEST_CASE("round trips and invariants over all trees of size <= 8") {
    for (int n = 1; n <= 8; ++n) {
        DfsTreeEnumerator trees(n);
        while (auto t = trees.next()) {
            CHECK(intervals_ok(*t));
            const ZagSequence d = depth_sequence(*t);
            CHECK(is_zag_sequence(d));
            CHECK(zag_to_dfs(d) == *t);
            CHECK(bracketing_to_dfs(dfs_to_bracketing(*t)) == *t);
            CHECK(dyck_to_dfs(dfs_to_dyck(*t)) == *t);
            const Bracketing b = dfs_to_bracketing(*t);
            CHECK(parse_bracketing(format_bracketing(b)) == b);

            // Chains and stars against their signature paths.
            const std::string steps = dfs_to_dyck(*t).steps;
            std::string chain_path(n - 1, 'U');
            chain_path.append(n - 1, 'D');
            CHECK((steps == chain_path) == (d == chain_zag(n)));
            if (n >= 2) {
                std::string star_path;
                for (int i = 0; i < n - 1; ++i) star_path += "UD";
                CHECK((steps == star_path) == (d == star_zag(n)));
            }
        }
    }
}
