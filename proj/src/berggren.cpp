#include "romik/berggren.hpp"

#include "romik/error.hpp"

#include <deque>
#include <ostream>
#include <queue>

namespace romik {

namespace {

using IntVec = std::array<Integer, 3>;

IntVec mat_apply(const std::array<int, 9>& m, const IntVec& v) {
    IntVec out;
    for (std::size_t r = 0; r < 3; ++r) {
        out[r] = m[3 * r] * v[0] + m[3 * r + 1] * v[1] + m[3 * r + 2] * v[2];
    }
    return out;
}

bool is_primitive_triple(const Integer& a, const Integer& b, const Integer& c) {
    if (a <= 0 || b <= 0 || c <= 0) return false;
    if (a * a + b * b != c * c) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g == 1;
}

bool is_primitive_triple(const IntVec& v) { return is_primitive_triple(v[0], v[1], v[2]); }

const std::array<int, 9>& u_matrix(Digit j) {
    switch (j) {
        case Digit::one: return integer_matrix(MatName::U1);
        case Digit::two: return integer_matrix(MatName::U2);
        case Digit::three: return integer_matrix(MatName::U3);
    }
    throw InvalidArgument("bad digit");
}

IntVec inverse_step(const Triple& t, Digit j) {
    return mat_apply(u_matrix(j), mat_apply(integer_matrix(MatName::H), IntVec{t.a(), t.b(), t.c()}));
}

}  // namespace

Triple::Triple(Integer a, Integer b, Integer c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (!is_primitive_triple(a_, b_, c_)) {
        throw InvalidArgument("(" + a_.get_str() + ", " + b_.get_str() + ", " + c_.get_str() +
                              ") is not a primitive Pythagorean triple");
    }
}

Vec3 Triple::vec() const { return {QFE(a_), QFE(b_), QFE(c_)}; }

CirclePoint Triple::point() const {
    return CirclePoint(QFE(make_rational(a_, c_)), QFE(make_rational(b_, c_)));
}

bool Triple::is_root() const { return *this == root_345() || *this == root_435(); }

std::strong_ordering operator<=>(const Triple& s, const Triple& t) {
    if (int r = cmp(s.c_, t.c_); r != 0) return r <=> 0;
    if (int r = cmp(s.a_, t.a_); r != 0) return r <=> 0;
    return cmp(s.b_, t.b_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Triple& t) {
    return os << '(' << t.a() << ", " << t.b() << ", " << t.c() << ')';
}

const Triple& root_345() {
    static const Triple t(3, 4, 5);
    return t;
}

const Triple& root_435() {
    static const Triple t(4, 3, 5);
    return t;
}

std::array<int, 3> terminal_vector(Terminal t) {
    return t == Terminal::x_axis ? std::array<int, 3>{1, 0, 1} : std::array<int, 3>{0, 1, 1};
}

std::array<Triple, 3> children(const Triple& t) {
    const IntVec v{t.a(), t.b(), t.c()};
    auto child = [&](MatName m) {
        IntVec w = mat_apply(integer_matrix(m), v);
        return Triple(std::move(w[0]), std::move(w[1]), std::move(w[2]));
    };
    return {child(MatName::M1), child(MatName::M2), child(MatName::M3)};
}

ParentStep parent(const Triple& t) {
    const Digit j = digit(t.point());
    IntVec p = inverse_step(t, j);
    if (p[0] == 0 && p[1] == 1 && p[2] == 1) return {Terminal::y_axis, j};
    if (p[0] == 1 && p[1] == 0 && p[2] == 1) return {Terminal::x_axis, j};
    return {Triple(std::move(p[0]), std::move(p[1]), std::move(p[2])), j};
}

std::vector<DescentStep> descend(const Triple& t) {
    std::vector<DescentStep> chain;
    Triple cur = t;
    while (!cur.is_root()) {
        ParentStep step = parent(cur);
        if (step.is_terminal()) {
            throw InvariantViolation("descent hit a terminal vector before a root");
        }
        Triple next = std::get<Triple>(std::move(step.parent));
        if (next.c() >= cur.c()) {
            throw InvariantViolation("descent did not decrease the hypotenuse");
        }
        chain.push_back({next, step.j});
        cur = std::move(next);
    }
    return chain;
}

std::vector<TreeNode> tree(const Triple& root, unsigned depth) {
    std::vector<TreeNode> out{{root, {}, root}};
    std::size_t level_begin = 0;
    for (unsigned level = 0; level < depth; ++level) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            const auto kids = children(out[i].triple);
            for (int j = 0; j < 3; ++j) {
                Word path = out[i].path;
                path.push_back(make_digit(j + 1));
                out.push_back({kids[j], std::move(path), root});
            }
        }
        level_begin = level_end;
    }
    return out;
}

std::vector<TreeNode> enumerate_bfs_nodes(const Integer& c_max) {
    struct ByHypotenuse {
        bool operator()(const TreeNode& s, const TreeNode& t) const { return s.triple > t.triple; }
    };
    std::priority_queue<TreeNode, std::vector<TreeNode>, ByHypotenuse> frontier;
    std::vector<TreeNode> out;
    for (const Triple* r : {&root_345(), &root_435()}) {
        if (r->c() <= c_max) frontier.push({*r, {}, *r});
    }
    while (!frontier.empty()) {
        TreeNode node = frontier.top();
        frontier.pop();
        const auto kids = children(node.triple);
        for (int j = 0; j < 3; ++j) {
            // Children strictly increase c, so pruning a child prunes its subtree.
            if (kids[j].c() > c_max) continue;
            Word path = node.path;
            path.push_back(make_digit(j + 1));
            frontier.push({kids[j], std::move(path), node.root});
        }
        out.push_back(std::move(node));
    }
    return out;
}

std::set<Triple> enumerate_bfs(const Integer& c_max) {
    std::set<Triple> out;
    for (auto& node : enumerate_bfs_nodes(c_max)) {
        if (!out.insert(node.triple).second) {
            throw InvariantViolation("triple generated twice by the Berggren trees");
        }
    }
    return out;
}

std::set<Triple> enumerate_oracle(const Integer& c_max) {
    std::set<Triple> out;
    Integer g;
    for (Integer m = 2; m * m + 1 <= c_max; ++m) {
        for (Integer n = 1; n < m; ++n) {
            const Integer c = m * m + n * n;
            if (c > c_max) break;
            if (mpz_odd_p(Integer(m - n).get_mpz_t()) == 0) continue;
            mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
            if (g != 1) continue;
            const Integer a = m * m - n * n;
            const Integer b = 2 * m * n;
            out.emplace(a, b, c);
            out.emplace(b, a, c);
        }
    }
    return out;
}

FunnelReport is_funnel(const Triple& t) {
    FunnelReport r;
    const IntVec v{t.a(), t.b(), t.c()};
    r.outdegree_three = true;
    bool children_larger = true;
    for (MatName m : {MatName::M1, MatName::M2, MatName::M3}) {
        const IntVec w = mat_apply(integer_matrix(m), v);
        if (!is_primitive_triple(w)) r.outdegree_three = false;
        if (w[2] <= t.c()) children_larger = false;
    }
    bool parent_smaller = true;
    for (Digit j : {Digit::one, Digit::two, Digit::three}) {
        const IntVec p = inverse_step(t, j);
        if (is_primitive_triple(p)) {
            ++r.indegree;
            if (p[2] >= t.c()) parent_smaller = false;
        }
    }
    r.indegree_one = r.indegree == 1;
    r.root_exception = t.is_root() && r.indegree == 0;
    r.monotone = children_larger && parent_smaller;
    return r;
}

}  // namespace romik
