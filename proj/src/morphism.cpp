#include "d0l/morphism.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "d0l/errors.hpp"

namespace d0l {

namespace {

void check_word(const Word& w, const Alphabet& alphabet, const char* what) {
    for (Letter a : w) {
        if (!alphabet.contains(a)) {
            throw DomainError(std::string(what) + ": letter id " + std::to_string(index(a)) +
                              " outside alphabet");
        }
    }
}

bool starts_with(const Word& w, const Word& prefix) {
    return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

Word tail(const Word& w, std::size_t from) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.end());
}

// Transitive closure of the relation a -> b iff b occurs in phi(a), restricted to `keep`.
std::vector<std::vector<bool>> reachability(const Morphism& phi, const std::vector<bool>& keep) {
    const std::size_t n = phi.source().size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        if (!keep[a]) {
            continue;
        }
        for (Letter b : phi.image(letter(a))) {
            if (keep[index(b)]) {
                reach[a][index(b)] = true;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[k][j]) {
                    reach[i][j] = true;
                }
            }
        }
    }
    return reach;
}

}  // namespace

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size()) {
        throw DomainError("morphism needs exactly one image per source letter");
    }
    for (const Word& w : images_) {
        check_word(w, target_, "morphism image");
    }
}

Morphism Morphism::endomorphism(Alphabet alphabet, std::vector<Word> images) {
    Alphabet copy = alphabet;
    return Morphism(std::move(alphabet), std::move(copy), std::move(images));
}

Morphism Morphism::identity(const Alphabet& alphabet) {
    std::vector<Word> images;
    for (Letter a : alphabet.letters()) {
        images.push_back(Word{a});
    }
    return endomorphism(alphabet, std::move(images));
}

const Word& Morphism::image(Letter a) const {
    if (!source_.contains(a)) {
        throw DomainError("letter id " + std::to_string(index(a)) + " outside morphism source");
    }
    return images_[index(a)];
}

bool Morphism::is_erasing() const {
    return std::any_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

std::size_t Morphism::max_image_length() const {
    std::size_t m = 0;
    for (const Word& w : images_) {
        m = std::max(m, w.size());
    }
    return m;
}

D0LSystem::D0LSystem(Morphism morphism, Word axiom) : morphism_(std::move(morphism)), axiom_(std::move(axiom)) {
    if (!morphism_.is_endomorphism()) {
        throw DomainError("a D0L-system needs an endomorphism");
    }
    if (axiom_.empty()) {
        throw DomainError("axiom must not be empty");
    }
    check_word(axiom_, alphabet(), "axiom");
}

Word ApplyFn::operator()(const Morphism& phi, const Word& w) const {
    Word out;
    for (Letter a : w) {
        const Word& img = phi.image(a);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Word iterate(const Morphism& phi, const Word& w, std::size_t n) {
    if (n > 0 && !phi.is_endomorphism()) {
        throw DomainError("iterate needs an endomorphism");
    }
    check_word(w, phi.source(), "iterate");
    Word cur = w;
    for (std::size_t i = 0; i < n; ++i) {
        cur = apply(phi, cur);
    }
    return cur;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (!(inner.target() == outer.source())) {
        throw DomainError("compose: inner target differs from outer source");
    }
    std::vector<Word> images;
    images.reserve(inner.source().size());
    for (const Word& w : inner.images()) {
        images.push_back(apply(outer, w));
    }
    return Morphism(inner.source(), outer.target(), std::move(images));
}

Word embed(const Word& w, const Alphabet& from, const Alphabet& to) {
    Word out;
    out.reserve(w.size());
    for (Letter a : w) {
        out.push_back(to.at(from.symbol(a)));
    }
    return out;
}

D0LSystem reduce(const D0LSystem& system) {
    const Morphism& phi = system.morphism();
    const std::size_t n = system.alphabet().size();
    std::vector<bool> seen(n, false);
    std::vector<Letter> stack;
    for (Letter a : system.axiom()) {
        if (!seen[index(a)]) {
            seen[index(a)] = true;
            stack.push_back(a);
        }
    }
    while (!stack.empty()) {
        Letter a = stack.back();
        stack.pop_back();
        for (Letter b : phi.image(a)) {
            if (!seen[index(b)]) {
                seen[index(b)] = true;
                stack.push_back(b);
            }
        }
    }
    if (std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
        return system;
    }

    std::vector<std::string> symbols;
    for (std::size_t a = 0; a < n; ++a) {
        if (seen[a]) {
            symbols.push_back(system.alphabet().symbol(letter(a)));
        }
    }
    Alphabet reduced(std::move(symbols));
    std::vector<Word> images;
    for (std::size_t a = 0; a < n; ++a) {
        if (seen[a]) {
            images.push_back(embed(phi.image(letter(a)), system.alphabet(), reduced));
        }
    }
    Word axiom = embed(system.axiom(), system.alphabet(), reduced);
    return D0LSystem(Morphism::endomorphism(reduced, std::move(images)), std::move(axiom));
}

std::set<Letter> mortal_letters(const Morphism& phi) {
    const std::size_t n = phi.source().size();
    std::vector<bool> mortal(n, false);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a) {
            if (mortal[a]) {
                continue;
            }
            const Word& img = phi.image(letter(a));
            if (std::all_of(img.begin(), img.end(), [&](Letter b) { return mortal[index(b)]; })) {
                mortal[a] = true;
                changed = true;
            }
        }
    }
    std::set<Letter> out;
    for (std::size_t a = 0; a < n; ++a) {
        if (mortal[a]) {
            out.insert(letter(a));
        }
    }
    return out;
}

// An immortal letter is unbounded iff it reaches a letter c on a cycle of the
// immortal-occurrence digraph from which some letter with at least two
// immortal letters in its image is reachable.
LetterClassification bounded_letters(const Morphism& phi) {
    if (!phi.is_endomorphism()) {
        throw DomainError("bounded_letters needs an endomorphism");
    }
    const std::size_t n = phi.source().size();
    LetterClassification out;
    out.mortal = mortal_letters(phi);

    std::vector<bool> immortal(n, true);
    for (Letter a : out.mortal) {
        immortal[index(a)] = false;
    }
    const auto reach = reachability(phi, immortal);

    std::vector<bool> expanding(n, false);
    for (std::size_t b = 0; b < n; ++b) {
        if (!immortal[b]) {
            continue;
        }
        const Word& img = phi.image(letter(b));
        expanding[b] = std::count_if(img.begin(), img.end(), [&](Letter c) { return immortal[index(c)]; }) >= 2;
    }

    std::vector<bool> pumping(n, false);  // on a cycle and able to reach an expanding letter
    for (std::size_t c = 0; c < n; ++c) {
        if (!immortal[c] || !reach[c][c]) {
            continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (expanding[b] && (b == c || reach[c][b])) {
                pumping[c] = true;
                break;
            }
        }
    }

    for (std::size_t a = 0; a < n; ++a) {
        bool unbounded = false;
        if (immortal[a]) {
            for (std::size_t c = 0; c < n && !unbounded; ++c) {
                unbounded = pumping[c] && (c == a || reach[a][c]);
            }
        }
        (unbounded ? out.unbounded : out.bounded).insert(letter(a));
    }
    return out;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
find_code_relation(std::span<const Word> words) {
    using Sequence = std::vector<std::size_t>;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].empty()) {
            return std::make_pair(Sequence{i}, Sequence{});
        }
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (words[i] == words[j]) {
                return std::make_pair(Sequence{i}, Sequence{j});
            }
        }
    }

    // The concatenation for `ahead` equals the one for `behind` followed by `dangling`.
    struct Node {
        Sequence ahead;
        Sequence behind;
        Word dangling;
    };
    std::deque<Node> queue;
    std::set<Word> visited;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i != j && words[j].size() < words[i].size() && starts_with(words[i], words[j])) {
                Word d = tail(words[i], words[j].size());
                if (visited.insert(d).second) {
                    queue.push_back(Node{{i}, {j}, std::move(d)});
                }
            }
        }
    }
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        for (std::size_t z = 0; z < words.size(); ++z) {
            const Word& y = words[z];
            Sequence behind = node.behind;
            behind.push_back(z);
            if (y == node.dangling) {
                return std::make_pair(std::move(node.ahead), std::move(behind));
            }
            if (y.size() < node.dangling.size() && starts_with(node.dangling, y)) {
                Word d = tail(node.dangling, y.size());
                if (visited.insert(d).second) {
                    queue.push_back(Node{node.ahead, std::move(behind), std::move(d)});
                }
            } else if (node.dangling.size() < y.size() && starts_with(y, node.dangling)) {
                Word d = tail(y, node.dangling.size());
                if (visited.insert(d).second) {
                    queue.push_back(Node{std::move(behind), node.ahead, std::move(d)});
                }
            }
        }
    }
    return std::nullopt;
}

InjectivityResult is_injective(const Morphism& phi) {
    auto relation = find_code_relation(phi.images());
    if (!relation) {
        return {};
    }
    auto to_word = [](const std::vector<std::size_t>& seq) {
        Word w;
        for (std::size_t i : seq) {
            w.push_back(letter(i));
        }
        return w;
    };
    Word u = to_word(relation->first);
    Word v = to_word(relation->second);
    if (v < u) {
        std::swap(u, v);
    }
    return InjectivityResult{false, std::make_pair(std::move(u), std::move(v))};
}

Letter first_letter(const Morphism& phi, Letter a) {
    const Word& img = phi.image(a);
    if (img.empty()) {
        throw PreconditionError("first_letter: image of '" + phi.source().symbol(a) + "' is empty");
    }
    return img.front();
}

}  // namespace d0l
