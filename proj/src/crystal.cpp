#include "spinten/crystal.hpp"

#include <algorithm>

namespace spinten {

namespace {

int residue_of(int row, int col, int p) {
    return (((col - row) % p) + p) % p;
}

void require_p_regular(const Partition& lambda, int p) {
    if (p == 2 && !lambda.is_two_regular())
        throw not_p_regular("partition is not 2-regular");
    if (p > 2) {
        int run = 1;
        for (int j = 2; j <= lambda.h(); ++j) {
            run = (lambda.part(j) == lambda.part(j - 1)) ? run + 1 : 1;
            if (run >= p) throw not_p_regular("partition is not p-regular");
        }
    }
}

}  // namespace

std::vector<Node> addable_nodes(const Partition& lambda, int p) {
    std::vector<Node> out;
    for (int r = 1; r <= lambda.h() + 1; ++r) {
        int len = lambda.part(r);
        if (r == 1 || lambda.part(r - 1) > len)
            out.push_back({r, len + 1, residue_of(r, len + 1, p)});
    }
    return out;
}

std::vector<Node> removable_nodes(const Partition& lambda, int p) {
    std::vector<Node> out;
    for (int r = 1; r <= lambda.h(); ++r) {
        int len = lambda.part(r);
        if (len > lambda.part(r + 1))
            out.push_back({r, len, residue_of(r, len, p)});
    }
    return out;
}

Partition remove_node(const Partition& lambda, const Node& a) {
    std::vector<int> ps = lambda.parts();
    if (a.row < 1 || a.row > lambda.h() || ps[a.row - 1] != a.col ||
        lambda.part(a.row + 1) == a.col)
        throw std::invalid_argument("remove_node: node is not removable");
    ps[a.row - 1] -= 1;
    while (!ps.empty() && ps.back() == 0) ps.pop_back();
    return Partition(std::move(ps));
}

SignatureData signature(const Partition& lambda, int i, int p) {
    SignatureData sig;
    sig.i = i;
    sig.p = p;
    // Merge addable and removable i-nodes by row (at most one per row).
    for (int r = 1; r <= lambda.h() + 1; ++r) {
        int len = lambda.part(r);
        if (r <= lambda.h() && len > lambda.part(r + 1) &&
            residue_of(r, len, p) == i)
            sig.word.push_back({{r, len, i}, true});
        else if ((r == 1 || lambda.part(r - 1) > len) &&
                 residue_of(r, len + 1, p) == i)
            sig.word.push_back({{r, len + 1, i}, false});
    }
    // Iteratively delete Addable-immediately-above-Removable pairs.
    std::vector<std::pair<Node, bool>> stack;
    for (auto& e : sig.word) {
        if (e.second && !stack.empty() && !stack.back().second)
            stack.pop_back();
        else
            stack.push_back(e);
    }
    for (auto& e : stack)
        (e.second ? sig.normal : sig.conormal).push_back(e.first);
    sig.eps = static_cast<int>(sig.normal.size());
    sig.phi = static_cast<int>(sig.conormal.size());
    if (sig.eps > 0) sig.good = sig.normal.back();
    if (sig.phi > 0) sig.cogood = sig.conormal.front();
    return sig;
}

int eps(const Partition& lambda, int i, int p) { return signature(lambda, i, p).eps; }
int phi(const Partition& lambda, int i, int p) { return signature(lambda, i, p).phi; }

std::optional<Partition> e_tilde(const Partition& lambda, int i, int r, int p) {
    require_p_regular(lambda, p);
    Partition cur = lambda;
    for (int step = 0; step < r; ++step) {
        SignatureData sig = signature(cur, i, p);
        if (!sig.good) return std::nullopt;
        cur = remove_node(cur, *sig.good);
    }
    return cur;
}

std::optional<Partition> f_tilde(const Partition& lambda, int i, int r, int p) {
    require_p_regular(lambda, p);
    Partition cur = lambda;
    for (int step = 0; step < r; ++step) {
        SignatureData sig = signature(cur, i, p);
        if (!sig.cogood) return std::nullopt;
        std::vector<int> ps = cur.parts();
        if (sig.cogood->row > cur.h())
            ps.push_back(1);
        else
            ps[sig.cogood->row - 1] += 1;
        cur = Partition(std::move(ps));
    }
    return cur;
}

bool is_JS(const Partition& lambda, int p) {
    require_p_regular(lambda, p);
    int total = 0;
    for (int i = 0; i < p; ++i) total += eps(lambda, i, p);
    return total == 1;
}

}  // namespace spinten
