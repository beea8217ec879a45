#ifndef L1HOM_SCOMPLEX_HPP
#define L1HOM_SCOMPLEX_HPP

#include <initializer_list>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace l1hom {

/// Raised for malformed documents and bad job configuration; the CLI maps it
/// to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element of the symmetric group on {0, ..., n} together with its parity.
struct Permutation {
    std::vector<int> images; // images[i] = pi(i)
    int sign = 1;

    static Permutation identity(int order);

    /// Validates that `images` is a bijection and computes the sign.
    static Permutation from_images(std::vector<int> images);

    int order() const { return static_cast<int>(images.size()); }

    bool operator==(const Permutation&) const = default;
};

/// (outer o inner)(i) = outer(inner(i)); orders must match.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Ordered vertex tuple (v_0, ..., v_n); repeats are allowed, so degenerate
/// simplices are first-class values. Whether the support is a face is a
/// property of the ambient complex, checked by SimplicialComplex::supports.
struct AffineSimplex {
    std::vector<int> verts;

    AffineSimplex() = default;
    explicit AffineSimplex(std::vector<int> v) : verts(std::move(v)) {}
    AffineSimplex(std::initializer_list<int> v) : verts(v) {}

    int dim() const { return static_cast<int>(verts.size()) - 1; }

    /// Deletes the j-th vertex; requires dim() >= 1 and 0 <= j <= dim().
    AffineSimplex face(int j) const;

    /// (v_{pi(0)}, ..., v_{pi(n)}); pi.order() must equal dim()+1.
    AffineSimplex permuted(const Permutation& pi) const;

    /// Prepends a vertex; the cone operator on tuples.
    AffineSimplex coned(int apex) const;

    /// Sorted, deduplicated vertex set.
    std::vector<int> support() const;

    auto operator<=>(const AffineSimplex&) const = default;
};

/// Finite abstract simplicial complex: vertices 0..num_vertices-1 and a
/// downward-closed set of non-empty faces. Immutable after construction.
class SimplicialComplex {
public:
    /// Builds the downward closure of the given facets. Every vertex singleton
    /// is a face, whether or not it appears in a facet.
    static SimplicialComplex from_facets(int num_vertices,
                                         const std::vector<std::vector<int>>& facets,
                                         std::string name = "");

    int num_vertices() const { return num_vertices_; }
    const std::string& name() const { return name_; }
    const std::set<std::vector<int>>& faces() const { return faces_; }
    std::size_t face_count() const { return faces_.size(); }
    int max_face_dim() const { return max_face_dim_; }

    /// `face` must be sorted and duplicate-free.
    bool has_face(const std::vector<int>& face) const { return faces_.count(face) != 0; }

    /// True iff the tuple's support is a face of this complex.
    bool supports(const AffineSimplex& t) const { return has_face(t.support()); }

    /// All (n+1)-tuples over the vertices whose support is a face, in
    /// lexicographic order. This is the canonical chain basis in dimension n.
    std::vector<AffineSimplex> tuple_basis(int n) const;

    bool operator==(const SimplicialComplex& other) const
    {
        return num_vertices_ == other.num_vertices_ && faces_ == other.faces_;
    }

private:
    SimplicialComplex() = default;

    int num_vertices_ = 0;
    int max_face_dim_ = -1;
    std::set<std::vector<int>> faces_;
    std::string name_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// Parses the complex document { "vertices": n, "facets": [[...]], "name": s }.
SimplicialComplex load_complex(const std::string& json_text);
SimplicialComplex load_complex_file(const std::string& path);

} // namespace l1hom

#endif
