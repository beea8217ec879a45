#include "l1hom/scomplex.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace l1hom {

Permutation Permutation::identity(int order)
{
    Permutation p;
    p.images.resize(order);
    for (int i = 0; i < order; ++i)
        p.images[i] = i;
    p.sign = 1;
    return p;
}

Permutation Permutation::from_images(std::vector<int> images)
{
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[v] = true;
    }
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (images[i] > images[j])
                ++inversions;
    Permutation p;
    p.images = std::move(images);
    p.sign = (inversions % 2 == 0) ? 1 : -1;
    return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner)
{
    if (outer.order() != inner.order())
        throw std::invalid_argument("permutation order mismatch in compose");
    Permutation p;
    p.images.resize(inner.order());
    for (int i = 0; i < inner.order(); ++i)
        p.images[i] = outer.images[inner.images[i]];
    p.sign = outer.sign * inner.sign;
    return p;
}

AffineSimplex AffineSimplex::face(int j) const
{
    if (dim() < 1)
        throw std::invalid_argument("face map undefined on a 0-simplex");
    if (j < 0 || j > dim())
        throw std::invalid_argument("face index out of range");
    AffineSimplex out;
    out.verts.reserve(verts.size() - 1);
    for (int i = 0; i <= dim(); ++i)
        if (i != j)
            out.verts.push_back(verts[i]);
    return out;
}

AffineSimplex AffineSimplex::permuted(const Permutation& pi) const
{
    if (pi.order() != dim() + 1)
        throw std::invalid_argument("permutation order does not match simplex dimension");
    AffineSimplex out;
    out.verts.resize(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        out.verts[i] = verts[pi.images[i]];
    return out;
}

AffineSimplex AffineSimplex::coned(int apex) const
{
    AffineSimplex out;
    out.verts.reserve(verts.size() + 1);
    out.verts.push_back(apex);
    out.verts.insert(out.verts.end(), verts.begin(), verts.end());
    return out;
}

std::vector<int> AffineSimplex::support() const
{
    std::vector<int> s = verts;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

SimplicialComplex SimplicialComplex::from_facets(int num_vertices,
                                                 const std::vector<std::vector<int>>& facets,
                                                 std::string name)
{
    if (num_vertices < 0)
        throw InputError("negative vertex count");
    SimplicialComplex K;
    K.num_vertices_ = num_vertices;
    K.name_ = std::move(name);
    for (int v = 0; v < num_vertices; ++v)
        K.faces_.insert({v});
    for (const auto& facet : facets) {
        if (facet.empty())
            throw InputError("empty facet");
        std::vector<int> f = facet;
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= num_vertices)
                throw InputError("facet references vertex " + std::to_string(v) +
                                 " outside 0.." + std::to_string(num_vertices - 1));
        // downward closure: all non-empty subsets of the facet
        const int k = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i))
                    sub.push_back(f[i]);
            K.faces_.insert(std::move(sub));
        }
    }
    for (const auto& f : K.faces_)
        K.max_face_dim_ = std::max(K.max_face_dim_, static_cast<int>(f.size()) - 1);
    return K;
}

std::vector<AffineSimplex> SimplicialComplex::tuple_basis(int n) const
{
    if (n < 0)
        throw std::invalid_argument("negative dimension");
    std::vector<AffineSimplex> out;
    if (num_vertices_ == 0)
        return out;
    std::vector<int> tuple(n + 1, 0);
    while (true) {
        AffineSimplex t(tuple);
        if (supports(t))
            out.push_back(std::move(t));
        // lexicographic odometer
        int pos = n;
        while (pos >= 0 && tuple[pos] == num_vertices_ - 1) {
            tuple[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++tuple[pos];
    }
    return out;
}

SimplicialComplex load_complex(const std::string& json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed complex document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("facets"))
        throw InputError("complex document must contain \"vertices\" and \"facets\"");
    if (!doc["vertices"].is_number_integer())
        throw InputError("\"vertices\" must be an integer");
    if (!doc["facets"].is_array())
        throw InputError("\"facets\" must be a list of vertex lists");
    std::vector<std::vector<int>> facets;
    for (const auto& f : doc["facets"]) {
        if (!f.is_array())
            throw InputError("each facet must be a list of vertex indices");
        std::vector<int> facet;
        for (const auto& v : f) {
            if (!v.is_number_integer())
                throw InputError("facet entries must be integers");
            facet.push_back(v.get<int>());
        }
        facets.push_back(std::move(facet));
    }
    std::string name = doc.value("name", std::string{});
    return SimplicialComplex::from_facets(doc["vertices"].get<int>(), facets, name);
}

SimplicialComplex load_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open complex file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_complex(buf.str());
}

} // namespace l1hom
