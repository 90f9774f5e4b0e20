#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kites/error.hpp"

namespace kites {

// Index set that may be infinite: either an explicit finite set, all of Z,
// or an upward ray {from, from+1, ...} of integers.
struct IndexSet {
    enum class Kind { Explicit, AllZ, FromN };
    Kind kind = Kind::Explicit;
    std::vector<long long> elems;  // Explicit: sorted ascending
    long long from = 0;            // FromN

    bool contains(long long i) const;
    bool empty() const;
    bool finite() const { return kind == Kind::Explicit; }
    std::string to_string() const;
    bool operator==(const IndexSet&) const = default;

    static IndexSet explicit_set(std::vector<long long> v);
    static IndexSet all_z();
    static IndexSet from_n(long long from);
};

enum class FrameKind { Finite, ZShift, NForward, NBackward };

std::string to_string(FrameKind k);

// Index frame (I0, I1, lambda): I1 subset of I0 and lambda : I1 -> I0
// injective.  Level sets are defined inductively by
//   I_{n+1} = { i in I_n : lambda(i) in I_n }.
//
// Finite frames carry labels 0..m-1.  Three infinite frames are supported in
// closed form: ZShift (I0 = I1 = Z, lambda = +1), NForward (I0 = I1 = N,
// lambda = +1) and NBackward (I0 = N, I1 = N \ {0}, lambda = -1).
class Frame {
public:
    // lambda given as pairs i -> lambda(i); domain must equal i1 exactly.
    static Frame finite(int m, std::vector<int> i1,
                        const std::vector<std::pair<int, int>>& lambda);
    static Frame z_shift();
    static Frame n_forward();
    static Frame n_backward();

    FrameKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == FrameKind::Finite; }

    // Finite accessors (throw DomainError on symbolic frames).
    int size() const;
    const std::vector<int>& i1() const;
    bool in_i1(int i) const;
    int lambda(int i) const;                  // requires i in I1
    std::optional<int> lambda_opt(int i) const;
    std::optional<int> lambda_inv(int i) const;

    // I_n for n >= 0 (finite frames: explicit; symbolic: closed form).
    IndexSet level_set(long long n) const;
    std::vector<int> level_elems(int n) const;  // finite frames only

    // lambda^p(i) for p >= 0 when defined (i must lie in I_p's domain chain).
    std::optional<long long> lambda_power(long long p, long long i) const;
    // Unique j with lambda^p(j) = i, if any (injectivity makes it unique).
    std::optional<long long> lambda_power_inv(long long p, long long i) const;

    // lambda^m(I_n); requires n >= m >= 0.
    IndexSet lambda_level_image(long long m, long long n) const;

    bool operator==(const Frame&) const = default;

private:
    FrameKind kind_ = FrameKind::Finite;
    int m_ = 0;
    std::vector<int> i1_;          // sorted
    std::vector<int> lambda_;      // size m, -1 outside I1
    std::vector<int> lambda_inv_;  // size m, -1 outside the image
};

// Forward orbits {lambda^p(i)} and {lambda^q(j)} intersect.  For the three
// symbolic frames this always holds.
bool connected(const Frame& f, long long i, long long j);
std::vector<long long> forward_orbit(const Frame& f, long long i, long long cap = 1'000'000);

// Weakly connected components of the finite graph i -> lambda(i), each sorted,
// ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Frame& f);

enum class FrameTag {
    Empty,          // I0 empty
    SingletonLoop,  // one vertex, lambda fixes it
    SingletonTail,  // one vertex, I1 empty
    Cycle,          // one component, a cycle of length >= 2
    Path,           // one component, a simple path with >= 2 vertices
    ZShift,
    NForward,
    NBackward,
    Disconnected,   // >= 2 components
};

std::string to_string(FrameTag t);

struct FrameClass {
    FrameTag tag = FrameTag::Empty;
    int cycle_len = 0;  // Cycle: number of vertices
    int path_len = 0;   // Path: number of vertices (|I1| = path_len - 1)
    // Whether the kite over any subdirectly irreducible nontrivial algebra is
    // subdirectly irreducible: exactly the connected shapes.
    bool si_shape = false;
    std::string detail;
};

FrameClass classify_frame(const Frame& f);

// Structural invariant I0 = I1 union lambda(I1); holds for every connected
// finite frame except the singleton tail.
bool i0_covered_by_i1_and_image(const Frame& f);

// Component-respecting relabeling t with t(I1) = J1 and t(lambda(i)) =
// lambda'(t(i)); existence is equivalent to equal component-type multisets.
std::optional<std::vector<int>> find_frame_isomorphism(const Frame& a, const Frame& b);
bool frame_isomorphic(const Frame& a, const Frame& b, const std::vector<int>& t);
bool frame_isomorphic(const Frame& a, const Frame& b);
std::string canonical_frame_form(const Frame& f);

// All frames on exactly m labeled vertices, up to isomorphism, sorted by
// canonical form.  m <= 7 guard (enumeration is factorial in m).
std::vector<Frame> enumerate_frames(int m);

// Sub-frame induced by one weak component (vertices relabeled in sorted
// order); `component` must be a union-closed set under lambda and lambda_inv.
Frame restrict_to_component(const Frame& f, const std::vector<int>& component);

// Builders.
Frame empty_frame();
Frame singleton_loop();
Frame singleton_tail();
Frame cycle_frame(int c);  // c >= 1; lambda(i) = i+1 mod c
Frame path_frame(int p);   // p >= 1; lambda(i) = i+1 on {0..p-2}
Frame loops_frame(int k);  // k disjoint self-loops

}  // namespace kites
