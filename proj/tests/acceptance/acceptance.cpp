// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "d0l/cli.hpp"
#include "d0l/engine.hpp"
#include "d0l/errors.hpp"
#include "d0l/oracle.hpp"
#include "d0l/pushy.hpp"
#include "d0l/simplify.hpp"
#include "support.hpp"

using namespace d0l;
using namespace d0l::testing;

namespace {

using Clock = std::chrono::steady_clock;

// Corpus and oracle settings.
unsigned corpus_seed = 20240601;
std::size_t corpus_size = 600;
constexpr std::size_t kOracleMaxLen = 6;
constexpr std::size_t kOraclePower = 3;
constexpr std::size_t kOracleCap = 400'000;
constexpr std::size_t kOracleMaxDepth = 48;

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) {
                detail << what;
            } else {
                detail << "; " << what;
            }
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto start = Clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream limit;
    limit.setf(std::ios::fixed);
    limit.precision(3);
    limit << "time " << secs << "s (limit " << limit_seconds << "s)";
    v.expect(secs < limit_seconds, "too slow: " + limit.str());
    std::cout << (v.ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << limit.str() << ")";
    if (!v.ok) {
        ++failures;
        std::cout << "\n      " << v.detail.str();
    }
    std::cout << std::endl;
}

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

std::set<std::string> rendered(const Alphabet& a, const std::set<Word>& words) {
    std::set<std::string> out;
    for (const Word& w : words) {
        out.insert(a.render(w));
    }
    return out;
}

std::string show(const Alphabet& a, const std::vector<Word>& words) {
    std::string out = "{";
    for (std::size_t i = 0; i < words.size(); ++i) {
        out += (i ? "," : "") + a.render(words[i]);
    }
    return out + "}";
}

std::string describe(const D0LSystem& s) {
    std::string text = cli::serialize_system(s);
    text.pop_back();
    std::replace(text.begin(), text.end(), '\n', ';');
    return text;
}

std::size_t max_profile_power(const Word& text, std::size_t max_len) {
    std::size_t best = 1;
    for (const auto& [v, p] : oracle::power_profile(text, max_len)) {
        best = std::max(best, p);
    }
    return best;
}

std::vector<D0LSystem> corpus() {
    std::mt19937 rng(corpus_seed);
    std::vector<D0LSystem> out;
    for (std::size_t i = 0; i < corpus_size; ++i) {
        out.push_back(random_system(rng, 4, 3));
    }
    return out;
}

oracle::OracleParams tuned_params(const D0LSystem& s) {
    oracle::OracleParams p;
    p.max_len = kOracleMaxLen;
    p.power_threshold = kOraclePower;
    p.length_cap = kOracleCap;
    p.depth = std::max<std::size_t>(1, oracle::affordable_depth(s, kOracleCap, kOracleMaxDepth));
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria; the corpus options exist for local stress runs"};
    app.add_option("--seed", corpus_seed, "Corpus RNG seed");
    app.add_option("--size", corpus_size, "Number of corpus systems")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    criterion(1, "non-injective four-letter system simplifies in one step to the three-letter g", 1.0, [](Verdict& v) {
        const Morphism f = example1_f();
        const auto chain = injective_simplification(D0LSystem(f, Word{letter(0)}));
        v.expect(chain.steps.size() == 1, "chain length " + std::to_string(chain.steps.size()));
        if (chain.steps.empty()) {
            return;
        }
        const auto& step = chain.steps.front();
        v.expect(step.h.target().size() == 3, "target alphabet size " + std::to_string(step.h.target().size()));
        v.expect(compose(step.k, step.h) == f, "k o h differs from f");
        const Morphism g = step.simplified();
        v.expect(is_injective(g).injective, "g is not injective");
        v.expect(equal_up_to_renaming(g, example1_g()), "g differs from x->xxyx, y->yz, z->xzxy");
    });

    criterion(2, "G: pushy, repetitive, one bounded class [1122]", 1.0, [](Verdict& v) {
        const D0LSystem g = system_g();
        const auto r = analyze(g);
        v.expect(r.pushy, "not pushy");
        v.expect(r.repetitive, "not repetitive");
        v.expect(r.classes.size() == 1, "class count " + std::to_string(r.classes.size()));
        if (r.classes.size() == 1) {
            const auto conj = rendered(g.alphabet(), r.classes[0].conjugates);
            v.expect(conj == std::set<std::string>{"1122", "1221", "2112", "2211"}, "wrong conjugate set");
            v.expect(r.classes[0].source == ClassSource::Bounded, "source is not bounded");
        }
    });

    criterion(3, "H: one bounded class [2112], left cycles at 0 and 3", 1.0, [](Verdict& v) {
        const D0LSystem h = system_h();
        const auto r = analyze(h);
        v.expect(r.classes.size() == 1, "class count " + std::to_string(r.classes.size()));
        if (r.classes.size() == 1) {
            const auto conj = rendered(h.alphabet(), r.classes[0].conjugates);
            v.expect(conj == std::set<std::string>{"1122", "1221", "2112", "2211"}, "wrong conjugate set");
            v.expect(r.classes[0].source == ClassSource::Bounded, "source is not bounded");
        }
        const auto left = build_side_graph(h, Side::Left);
        const auto cs = cycles(left);
        v.expect(cs.size() == 2, "left cycle count " + std::to_string(cs.size()));
        if (cs.size() == 2) {
            v.expect(cs[0].vertices == std::vector<Letter>{h.alphabet().at("0")} && cs[0].labels[0].empty(),
                     "cycle at 0 must carry the empty label");
            v.expect(cs[1].vertices == std::vector<Letter>{h.alphabet().at("3")} &&
                         h.alphabet().render(cs[1].labels[0]) == "12",
                     "cycle at 3 must carry the label 12");
        }
    });

    criterion(4, "Thue-Morse: not pushy, not repetitive, no power above 2 up to phi^12", 5.0, [](Verdict& v) {
        const D0LSystem tm = thue_morse();
        const auto r = analyze(tm);
        v.expect(!r.pushy, "pushy");
        v.expect(!r.repetitive, "repetitive");
        v.expect(r.classes.empty(), "classes reported");
        const Word w = iterate(tm.morphism(), tm.axiom(), 12);
        const std::size_t p = max_profile_power(w, 8);
        v.expect(p <= 2, "oracle found a power " + std::to_string(p));
    });

    criterion(5, "Fibonacci: not repetitive, no fourth power up to phi^15", 5.0, [](Verdict& v) {
        const D0LSystem fib = fibonacci();
        const auto r = analyze(fib);
        v.expect(!r.repetitive, "repetitive");
        v.expect(r.classes.empty(), "classes reported");
        std::size_t p = 1;
        for (const Word& w : oracle::iterates(fib, 15, 1'000'000)) {
            p = std::max(p, max_profile_power(w, 8));
        }
        v.expect(p < 4, "oracle found a power " + std::to_string(p));
    });

    criterion(6, "x->xx gives unbounded [x]; a->ab, b->ab gives [ab] after one merge", 1.0, [](Verdict& v) {
        const D0LSystem x = system("x", {"xx"}, "x");
        const auto rx = analyze(x);
        v.expect(rx.classes.size() == 1, "x->xx class count " + std::to_string(rx.classes.size()));
        if (rx.classes.size() == 1) {
            v.expect(x.alphabet().render(rx.classes[0].representative) == "x", "x->xx class differs from [x]");
            v.expect(rx.classes[0].source == ClassSource::Unbounded, "x->xx source is not unbounded");
        }
        const D0LSystem ab = system("ab", {"ab", "ab"}, "a");
        const auto rab = analyze(ab);
        v.expect(rab.chain.steps.size() == 1 && rab.chain.steps[0].kind == SimplificationKind::DuplicateMerge,
                 "expected exactly one duplicate merge");
        v.expect(rab.classes.size() == 1, "a->ab class count " + std::to_string(rab.classes.size()));
        if (rab.classes.size() == 1) {
            v.expect(ab.alphabet().render(rab.classes[0].representative) == "ab", "class differs from [ab]");
        }
    });

    const auto systems = corpus();

    criterion(7, "corpus of " + std::to_string(corpus_size) + " random systems agrees with the oracle", 300.0,
              [&](Verdict& v) {
                  std::size_t erasing = 0;
                  std::size_t non_injective = 0;
                  std::size_t repetitive = 0;
                  std::size_t disagreements = 0;
                  for (std::size_t i = 0; i < systems.size(); ++i) {
                      const D0LSystem& s = systems[i];
                      const Alphabet& a = s.alphabet();
                      const std::string tag = "system " + std::to_string(i) + " {" +
                                              describe(s) + "}";
                      erasing += s.morphism().is_erasing();
                      non_injective += !is_injective(s.morphism()).injective;

                      const auto cls = bounded_letters(s.morphism());
                      for (Letter c : a.letters()) {
                          if (cls.is_bounded(c) != simulated_bounded(s.morphism(), c)) {
                              v.expect(false, tag + ": boundedness of " + a.symbol(c));
                          }
                      }

                      const auto r = analyze(s);
                      repetitive += r.repetitive;
                      D0LSystem current = r.chain.original_system;
                      for (const auto& step : r.chain.steps) {
                          if (compose(step.k, step.h) != current.morphism()) {
                              v.expect(false, tag + ": k o h differs from the step input");
                          }
                          current = reduce(D0LSystem(step.simplified(), apply(step.h, current.axiom())));
                      }
                      if (!r.final_classes.empty()) {
                          const auto graph = periodic_factor_graph(r);
                          v.expect(graph.vertices.size() == r.final_classes.size(), tag + ": graph size");
                      }

                      std::vector<Word> reps;
                      for (const auto& c : r.classes) {
                          reps.push_back(c.representative);
                      }
                      const auto params = tuned_params(s);
                      const auto check =
                          oracle::cross_check(reps, oracle::observed_classes(s, params), params.max_len);
                      if (!check.agree()) {
                          ++disagreements;
                          v.expect(false, tag + ": depth " + std::to_string(params.depth) + " unreported " +
                                              show(a, check.unreported) + " unconfirmed " +
                                              show(a, check.unconfirmed));
                      }
                  }
                  v.expect(erasing > 0, "corpus has no erasing system");
                  v.expect(non_injective > 0, "corpus has no non-injective system");
                  std::cout << "      corpus: " << systems.size() << " systems, " << erasing << " erasing, "
                            << non_injective << " non-injective, " << repetitive << " repetitive, "
                            << disagreements << " oracle disagreements" << std::endl;
              });

    criterion(8, "analyze is deterministic on the corpus (byte-identical JSON)", 300.0, [&](Verdict& v) {
        for (std::size_t i = 0; i < systems.size(); ++i) {
            const std::string first = cli::report_to_json(analyze(systems[i])).dump();
            const std::string second = cli::report_to_json(analyze(systems[i])).dump();
            v.expect(first == second, "system " + std::to_string(i) + " differs between runs");
        }
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
