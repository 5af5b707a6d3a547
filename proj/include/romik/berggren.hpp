#pragma once

// Berggren trees of primitive Pythagorean triples.

#include "romik/romik_map.hpp"

#include <array>
#include <compare>
#include <iosfwd>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace romik {

/// A primitive Pythagorean triple: a^2 + b^2 = c^2, a, b, c > 0, gcd 1.
class Triple {
public:
    /// Throws InvalidArgument if (a, b, c) is not a primitive triple.
    Triple(Integer a, Integer b, Integer c);
    Triple(long a, long b, long c) : Triple(Integer(a), Integer(b), Integer(c)) {}

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }

    Vec3 vec() const;
    CirclePoint point() const;
    bool is_root() const;

    friend bool operator==(const Triple&, const Triple&) = default;
    /// Orders by hypotenuse, then a, then b.
    friend std::strong_ordering operator<=>(const Triple& s, const Triple& t);

private:
    Integer a_, b_, c_;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

const Triple& root_345();
const Triple& root_435();

/// Integer vectors reached by one parent step from a root.
enum class Terminal { x_axis /* (1,0,1) */, y_axis /* (0,1,1) */ };

std::array<int, 3> terminal_vector(Terminal t);

struct ParentStep {
    std::variant<Triple, Terminal> parent;
    Digit j;

    bool is_terminal() const { return std::holds_alternative<Terminal>(parent); }
};

/// (M1 t, M2 t, M3 t).
std::array<Triple, 3> children(const Triple& t);

/// U_j H t with j = digit(t / c). The roots return a Terminal marker.
ParentStep parent(const Triple& t);

struct DescentStep {
    Triple parent;
    Digit j;
};

/// Parent chain down to (3,4,5) or (4,3,5); empty for a root.
std::vector<DescentStep> descend(const Triple& t);

struct TreeNode {
    Triple triple;
    Word path;     // edge labels from the root
    Triple root;
};

/// Breadth-first expansion below `root` (usually one of the two roots) to
/// the given depth, children visited as M1, M2, M3.
std::vector<TreeNode> tree(const Triple& root, unsigned depth);

/// Every descendant of both roots with c <= c_max, frontier ordered by c.
std::vector<TreeNode> enumerate_bfs_nodes(const Integer& c_max);
std::set<Triple> enumerate_bfs(const Integer& c_max);

/// Independent oracle: Euclid's parametrization, both leg orders.
std::set<Triple> enumerate_oracle(const Integer& c_max);

struct FunnelReport {
    bool outdegree_three = false;   // all of M_j t are primitive triples
    bool indegree_one = false;      // exactly one U_j H t is a primitive triple
    bool monotone = false;          // children have larger c, parent smaller
    int indegree = 0;
    bool root_exception = false;    // (3,4,5) / (4,3,5): indegree 0

    bool is_funnel() const { return outdegree_three && indegree_one && monotone; }
};

FunnelReport is_funnel(const Triple& t);

}  // namespace romik
