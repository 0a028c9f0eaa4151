#include "spinten/rep.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace spinten {

std::string GroupTag::str() const {
    std::ostringstream os;
    switch (kind) {
        case GroupKind::Sym: os << "S" << n; break;
        case GroupKind::Alt: os << "A" << n; break;
        case GroupKind::Young:
            os << "S(";
            for (size_t i = 0; i < comp.size(); ++i) {
                if (i) os << ',';
                os << comp[i];
            }
            os << ')';
            break;
    }
    return os.str();
}

std::string RepLabel::str() const {
    std::string s = lambda.str();
    if (split == SplitTag::Plus) s += "+";
    if (split == SplitTag::Minus) s += "-";
    return s;
}

void Rep::check() const {
    for (const auto& g : gens) {
        if (g.rows() != degree || g.cols() != degree)
            throw shape_mismatch("Rep: generator shape mismatch");
        if (!g.inverse())
            throw std::invalid_argument("Rep: singular generator");
    }
}

uint64_t Rep::digest() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(degree));
    for (const auto& g : gens) mix(g.digest());
    return h;
}

void Rep::save(std::ostream& os) const {
    os.write("SPTNREP1", 8);
    auto put32 = [&](uint32_t x) {
        for (int k = 0; k < 4; ++k) os.put(static_cast<char>(x >> (8 * k)));
    };
    put32(static_cast<uint32_t>(degree));
    put32(static_cast<uint32_t>(gens.size()));
    put32(static_cast<uint32_t>(tag.kind));
    put32(static_cast<uint32_t>(tag.n));
    put32(static_cast<uint32_t>(tag.comp.size()));
    for (int c : tag.comp) put32(static_cast<uint32_t>(c));
    put32(label ? 1u : 0u);
    if (label) {
        put32(static_cast<uint32_t>(label->lambda.h()));
        for (int p : label->lambda.parts()) put32(static_cast<uint32_t>(p));
        put32(static_cast<uint32_t>(label->split));
    }
    for (const auto& g : gens) g.save(os);
}

Rep Rep::load(std::istream& is) {
    char magic[8];
    is.read(magic, 8);
    if (!is || std::string(magic, 8) != "SPTNREP1")
        throw std::runtime_error("Rep::load: bad magic");
    auto get32 = [&]() {
        uint32_t x = 0;
        for (int k = 0; k < 4; ++k)
            x |= static_cast<uint32_t>(static_cast<unsigned char>(is.get())) << (8 * k);
        return x;
    };
    Rep r;
    r.degree = static_cast<int>(get32());
    uint32_t ngens = get32();
    r.tag.kind = static_cast<GroupKind>(get32());
    r.tag.n = static_cast<int>(get32());
    uint32_t nc = get32();
    for (uint32_t i = 0; i < nc; ++i) r.tag.comp.push_back(static_cast<int>(get32()));
    if (get32()) {
        uint32_t h = get32();
        std::vector<int> parts;
        for (uint32_t i = 0; i < h; ++i) parts.push_back(static_cast<int>(get32()));
        RepLabel lab;
        lab.lambda = Partition(parts);
        lab.split = static_cast<SplitTag>(get32());
        r.label = lab;
    }
    if (!is) throw std::runtime_error("Rep::load: truncated header");
    for (uint32_t i = 0; i < ngens; ++i) r.gens.push_back(BitMatrix::load(is));
    return r;
}

Rep tensor(const Rep& a, const Rep& b) {
    if (a.gens.size() != b.gens.size() || !(a.tag == b.tag))
        throw shape_mismatch("tensor: incompatible representations");
    Rep out;
    out.degree = a.degree * b.degree;
    out.tag = a.tag;
    for (size_t i = 0; i < a.gens.size(); ++i)
        out.gens.push_back(a.gens[i].kron(b.gens[i]));
    return out;
}

Rep dual(const Rep& r) {
    Rep out;
    out.degree = r.degree;
    out.tag = r.tag;
    for (const auto& g : r.gens) {
        auto inv = g.inverse();
        if (!inv) throw std::invalid_argument("dual: singular generator");
        out.gens.push_back(inv->transpose());
    }
    return out;
}

Rep restrict_words(const Rep& r, const std::vector<std::vector<int>>& words,
                   GroupTag new_tag) {
    Rep out;
    out.degree = r.degree;
    out.tag = new_tag;
    for (const auto& w : words) {
        BitMatrix m = BitMatrix::identity(r.degree);
        for (int idx : w) {
            if (idx < 0 || idx >= static_cast<int>(r.gens.size()))
                throw std::out_of_range("restrict_words: bad generator index");
            m = m * r.gens[idx];
        }
        out.gens.push_back(std::move(m));
    }
    return out;
}

Rep restrict_to_alt(const Rep& r) {
    if (r.tag.kind != GroupKind::Sym)
        throw std::invalid_argument("restrict_to_alt: expected a Sym representation");
    int n = r.tag.n;
    std::vector<std::vector<int>> words;
    if (n >= 3) {
        words.push_back({0, 1});  // s1*s2
        for (int k = 3; k <= n - 1; ++k) words.push_back({0, k - 1});  // s1*s_k
    }
    Rep out = restrict_words(r, words, GroupTag{GroupKind::Alt, n, {}});
    out.label = r.label;
    return out;
}

Rep restrict_to_sym_minus1(const Rep& r) {
    if (r.tag.kind != GroupKind::Sym || r.tag.n < 2)
        throw std::invalid_argument("restrict_to_sym_minus1: expected Sym(n), n >= 2");
    Rep out = r;
    out.gens.pop_back();
    out.tag.n -= 1;
    out.label.reset();
    return out;
}

Rep young_restrict(const Rep& r, const std::vector<int>& comp) {
    if (r.tag.kind != GroupKind::Sym)
        throw std::invalid_argument("young_restrict: expected a Sym representation");
    int n = r.tag.n;
    int total = std::accumulate(comp.begin(), comp.end(), 0);
    if (total != n || comp.empty())
        throw std::invalid_argument("young_restrict: composition does not sum to n");
    for (int c : comp)
        if (c < 1) throw std::invalid_argument("young_restrict: nonpositive block");
    std::vector<bool> cut(n + 1, false);
    int acc = 0;
    for (size_t i = 0; i + 1 < comp.size(); ++i) {
        acc += comp[i];
        cut[acc] = true;
    }
    std::vector<std::vector<int>> words;
    for (int j = 1; j <= n - 1; ++j)
        if (!cut[j]) words.push_back({j - 1});
    return restrict_words(r, words, GroupTag{GroupKind::Young, n, comp});
}

Rep conjugate_by_s1(const Rep& r) {
    if (r.tag.kind != GroupKind::Alt)
        throw std::invalid_argument("conjugate_by_s1: expected an Alt representation");
    Rep out = r;
    if (!out.gens.empty()) {
        auto inv = out.gens[0].inverse();
        if (!inv) throw std::invalid_argument("conjugate_by_s1: singular generator");
        out.gens[0] = *inv;
    }
    return out;
}

}  // namespace spinten
