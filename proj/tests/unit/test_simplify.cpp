#include <algorithm>
#include <numeric>
#include <random>

#include "d0l/errors.hpp"
#include "d0l/simplify.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace d0l;
using namespace d0l::testing;

namespace {

// Tries every bijection between the two alphabets.
bool equal_up_to_renaming(const Morphism& a, const Morphism& b) {
    const std::size_t n = a.source().size();
    if (n != b.source().size()) {
        return false;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Word mapped;
            for (Letter c : a.image(letter(i))) {
                mapped.push_back(letter(perm[index(c)]));
            }
            ok = mapped == b.image(letter(perm[i]));
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::set<Word> image_set(const Morphism& k) { return {k.images().begin(), k.images().end()}; }

// h o f^n == g^n o h and f^(n+1) == k o g^n o h, checked letter by letter.
void check_twining(const SimplificationStep& step, const Morphism& f, std::size_t max_n) {
    const Morphism g = step.simplified();
    for (Letter a : f.source().letters()) {
        Word fa{a};
        Word ga = apply(step.h, Word{a});
        for (std::size_t n = 0; n <= max_n && fa.size() < 2000 && ga.size() < 2000; ++n) {
            CHECK(apply(step.h, fa) == ga);
            fa = apply(f, fa);
            CHECK(apply(step.k, ga) == fa);
            ga = apply(g, ga);
        }
    }
}

}  // namespace

TEST_SUITE("simplify") {
    TEST_CASE("erasing elimination drops the erased letter") {
        const Morphism f = endo("ab", {"ab", ""});
        const auto step = eliminate_erasing(f);
        CHECK(step.kind == SimplificationKind::ErasingElimination);
        CHECK(step.h.target().symbols() == std::vector<std::string>{"a"});
        CHECK(step.h.source().render(step.k.image(letter(0))) == "ab");
        CHECK(step.h.image(letter(1)).empty());
        const Morphism g = step.simplified();
        CHECK(g.source().render(g.image(letter(0))) == "a");

        const auto zaz = eliminate_erasing(endo("az", {"zaz", ""}));
        CHECK(zaz.simplified().source().render(zaz.simplified().image(letter(0))) == "a");
        CHECK_THROWS_AS(eliminate_erasing(system_g().morphism()), PreconditionError);
    }

    TEST_CASE("erasing elimination threads the axiom") {
        const auto chain = injective_simplification(system("az", {"a", ""}, "az"));
        REQUIRE(chain.steps.size() == 1);
        CHECK(chain.final_system.alphabet().render(chain.final_system.axiom()) == "a");
        CHECK(is_injective(chain.final_system.morphism()));
    }

    TEST_CASE("duplicate images merge") {
        const auto step = merge_duplicate_images(endo("ab", {"ab", "ab"}));
        CHECK(step.kind == SimplificationKind::DuplicateMerge);
        const Morphism g = step.simplified();
        REQUIRE(g.source().size() == 1);
        CHECK(g.image(letter(0)) == Word{letter(0), letter(0)});

        const auto three = merge_duplicate_images(endo("abc", {"ba", "ba", "c"}));
        const Morphism g3 = three.simplified();
        REQUIRE(g3.source().size() == 2);
        CHECK(g3.source().render(g3.image(g3.source().at("a"))) == "aa");
        CHECK(g3.source().render(g3.image(g3.source().at("c"))) == "c");
        CHECK_THROWS_AS(merge_duplicate_images(system_g().morphism()), PreconditionError);
    }

    TEST_CASE("code reduction on the non-injective four-letter example") {
        const Morphism f = example1_f();
        const auto step = code_reduce(f);
        CHECK(step.kind == SimplificationKind::CodeReduction);
        const Alphabet& a = f.source();
        CHECK(image_set(step.k) == std::set<Word>{a.spell("aca"), a.spell("b"), a.spell("adc")});
        CHECK(equal_up_to_renaming(step.simplified(), example1_g()));
        CHECK(is_injective(step.simplified()));
        check_twining(step, f, 4);
    }

    TEST_CASE("code reduction to a smaller code") {
        const Morphism f = endo("abc", {"a", "ab", "ba"});
        const auto step = code_reduce(f);
        CHECK(image_set(step.k) == std::set<Word>{f.source().spell("a"), f.source().spell("b")});
        check_twining(step, f, 4);

        const Morphism pow = endo("ab", {"ab", "abab"});
        const auto single = code_reduce(pow);
        CHECK(image_set(single.k) == std::set<Word>{pow.source().spell("ab")});
        check_twining(single, pow, 4);
        CHECK_THROWS_AS(code_reduce(system_g().morphism()), PreconditionError);
    }

    TEST_CASE("factorizing basis search") {
        const Alphabet a({"a", "b"});
        const std::vector<Word> words{a.spell("a"), a.spell("ab"), a.spell("ba")};
        const auto basis = search_factorizing_basis(words, 2);
        REQUIRE(basis.has_value());
        CHECK(std::set<Word>(basis->begin(), basis->end()) == std::set<Word>{a.spell("a"), a.spell("b")});
        CHECK_FALSE(search_factorizing_basis(words, 1).has_value());

        const std::vector<Word> basis_ab{a.spell("a"), a.spell("b")};
        CHECK(factorize(a.spell("aba"), basis_ab) == std::vector<std::size_t>{0, 1, 0});
        CHECK_FALSE(factorize(a.spell("ab"), std::vector<Word>{a.spell("ba")}).has_value());
    }

    TEST_CASE("chains on the reference systems") {
        const auto example = injective_simplification(D0LSystem(example1_f(), Word{letter(0)}));
        REQUIRE(example.steps.size() == 1);
        CHECK(example.steps[0].kind == SimplificationKind::CodeReduction);
        CHECK(example.final_system.alphabet().size() == 3);

        CHECK(injective_simplification(system_g()).steps.empty());

        const auto merged = injective_simplification(system("ab", {"ab", "ab"}, "a"));
        REQUIRE(merged.steps.size() == 1);
        CHECK(merged.final_system.morphism().image(letter(0)) == Word{letter(0), letter(0)});
        CHECK(merged.map_back(Word{letter(0)}) == spell(merged.original_system, "ab"));
    }

    TEST_CASE("random chains are short, injective and twined") {
        std::mt19937 rng(2024);
        int chains = 0;
        for (int trial = 0; trial < 600; ++trial) {
            const D0LSystem s = reduce(random_system(rng));
            if (bounded_letters(s.morphism()).unbounded.empty()) {
                continue;  // finite language: nothing to simplify towards
            }
            const SimplificationChain chain = injective_simplification(s);
            if (chain.steps.empty()) {
                continue;
            }
            ++chains;
            CHECK(chain.steps.size() <= s.alphabet().size());
            CHECK(is_injective(chain.final_system.morphism()));
            D0LSystem current = s;
            for (const auto& step : chain.steps) {
                CHECK(step.h.target().size() < step.h.source().size());
                check_twining(step, current.morphism(), 3);
                current = reduce(D0LSystem(step.simplified(), apply(step.h, current.axiom())));
            }
            CHECK(current == chain.final_system);
        }
        CHECK(chains > 50);
    }
}
