#pragma once

// Embedding schemes: a cyclic rotation of neighbors around each vertex plus
// an edge signature in {+1,-1}. Tracing the scheme yields its faces and the
// Euler genus 2c - p + q - F of the underlying cellular embedding; the
// scheme is orientable exactly when every cycle has positive signature
// product. Certificates bundle a scheme with the traced invariants and a
// graph fingerprint, and round-trip through a line-oriented text format.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ringtopo {

class MalformedScheme : public std::runtime_error {
public:
    explicit MalformedScheme(const std::string& msg) : std::runtime_error(msg) {}
};

struct SignedScheme {
    // rotation[v] = neighbors of v in cyclic order
    std::vector<std::vector<int>> rotation;
    // explicit signatures, endpoints sorted; edges not listed carry +1.
    // Producers list exactly the co-tree edges of their normalization.
    std::vector<std::pair<std::pair<int, int>, int>> signatures;

    int signature_of(int u, int v) const {
        if (u > v) std::swap(u, v);
        for (const auto& [e, s] : signatures)
            if (e.first == u && e.second == v) return s;
        return +1;
    }
};

struct FaceTraceResult {
    int face_count = 0;
    int euler_genus = 0;
    bool orientable = true;
    int components = 0;
    // one representative walk per face, as (tail, head) dart sequences;
    // isolated vertices contribute an empty walk each
    std::vector<std::vector<std::pair<int, int>>> faces;
};

namespace trace_detail {

struct DartMaps {
    std::vector<std::pair<int, int>> edges;       // sorted endpoint pairs
    std::vector<int> sig;                         // per edge
    std::vector<std::map<int, int>> pos;          // pos[v][neighbor] = index in rotation[v]
    std::vector<int> edge_id_at;                  // dense (u * p + v) -> edge id, or map for big p
    std::map<std::pair<int, int>, int> edge_id;
};

}  // namespace trace_detail

inline FaceTraceResult trace_faces(const Graph& g, const SignedScheme& scheme) {
    const int p = g.vertex_count();
    const int q = g.edge_count();
    for (const auto& [u, v] : g.edges())
        if (u == v) throw MalformedScheme("schemes are defined for loop-free graphs");
    if (static_cast<int>(scheme.rotation.size()) != p)
        throw MalformedScheme("rotation table size does not match vertex count");
    for (int v = 0; v < p; ++v) {
        auto rot = scheme.rotation[static_cast<std::size_t>(v)];
        std::sort(rot.begin(), rot.end());
        if (rot != g.neighbors(v))
            throw MalformedScheme("rotation at vertex " + std::to_string(v) +
                                  " is not a permutation of its neighbors");
    }

    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    std::map<std::pair<int, int>, int> edge_id;
    for (int e = 0; e < q; ++e) edge_id[edges[static_cast<std::size_t>(e)]] = e;

    std::vector<int> sig(static_cast<std::size_t>(q), +1);
    for (auto [key, s] : scheme.signatures) {
        if (key.first > key.second) std::swap(key.first, key.second);
        auto it = edge_id.find(key);
        if (it == edge_id.end()) throw MalformedScheme("signature on a non-edge");
        if (s != 1 && s != -1) throw MalformedScheme("signature must be +1 or -1");
        sig[static_cast<std::size_t>(it->second)] = s;
    }

    std::vector<std::map<int, int>> pos(static_cast<std::size_t>(p));
    for (int v = 0; v < p; ++v)
        for (std::size_t i = 0; i < scheme.rotation[static_cast<std::size_t>(v)].size(); ++i)
            pos[static_cast<std::size_t>(v)][scheme.rotation[static_cast<std::size_t>(v)][i]] =
                static_cast<int>(i);

    // signed darts: ((tail -> head), sign). dart 2e runs first->second.
    auto dart_tail = [&](int d) {
        return d % 2 == 0 ? edges[static_cast<std::size_t>(d / 2)].first
                          : edges[static_cast<std::size_t>(d / 2)].second;
    };
    auto dart_head = [&](int d) {
        return d % 2 == 0 ? edges[static_cast<std::size_t>(d / 2)].second
                          : edges[static_cast<std::size_t>(d / 2)].first;
    };
    auto step = [&](int sd) {
        int d = sd / 2;
        int s = (sd % 2 == 0) ? +1 : -1;
        int e = d / 2;
        int h = dart_head(d), t = dart_tail(d);
        int s2 = s * sig[static_cast<std::size_t>(e)];
        const auto& rot = scheme.rotation[static_cast<std::size_t>(h)];
        int deg = static_cast<int>(rot.size());
        int i = pos[static_cast<std::size_t>(h)].at(t);
        int j = s2 > 0 ? (i + 1) % deg : (i + deg - 1) % deg;
        int w = rot[static_cast<std::size_t>(j)];
        auto key = std::make_pair(std::min(h, w), std::max(h, w));
        int e2 = edge_id.at(key);
        int d2 = 2 * e2 + (h == key.first ? 0 : 1);
        return 2 * d2 + (s2 > 0 ? 0 : 1);
    };
    auto mirror = [&](int sd) {
        int d = sd / 2;
        int s = (sd % 2 == 0) ? +1 : -1;
        int e = d / 2;
        int rd = d ^ 1;
        int rs = -s * sig[static_cast<std::size_t>(e)];
        return 2 * rd + (rs > 0 ? 0 : 1);
    };

    const int total = 4 * q;
    std::vector<int> orbit(static_cast<std::size_t>(total), -1);
    std::vector<std::vector<int>> orbits;
    for (int start = 0; start < total; ++start) {
        if (orbit[static_cast<std::size_t>(start)] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        orbits.emplace_back();
        int sd = start;
        do {
            orbit[static_cast<std::size_t>(sd)] = id;
            orbits.back().push_back(sd);
            sd = step(sd);
        } while (sd != start);
    }
    // every facial walk pairs with its reverse; a violation means the
    // transition rule is broken
    for (int sd = 0; sd < total; ++sd)
        if (orbit[static_cast<std::size_t>(sd)] == orbit[static_cast<std::size_t>(mirror(sd))])
            throw std::logic_error("face tracing produced a self-paired walk");

    FaceTraceResult result;
    result.components = g.component_count();
    int isolated = 0;
    for (int v = 0; v < p; ++v)
        if (g.neighbor_count(v) == 0) ++isolated;
    result.face_count = static_cast<int>(orbits.size()) / 2 + isolated;
    result.euler_genus = 2 * result.components - p + q - result.face_count;
    if (result.euler_genus < 0) throw std::logic_error("negative Euler genus from face trace");

    // keep the orbit of each mirror pair holding the smaller least dart
    for (const auto& o : orbits) {
        int least = *std::min_element(o.begin(), o.end());
        int mleast = *std::min_element(o.begin(), o.end(), [&](int a, int b) { return mirror(a) < mirror(b); });
        if (least < mirror(mleast)) {
            std::vector<std::pair<int, int>> walk;
            // start the reported walk at the least dart
            std::size_t offset = 0;
            for (std::size_t i = 0; i < o.size(); ++i)
                if (o[i] == least) offset = i;
            for (std::size_t i = 0; i < o.size(); ++i) {
                int sd = o[(offset + i) % o.size()];
                int d = sd / 2;
                walk.emplace_back(dart_tail(d), dart_head(d));
            }
            result.faces.push_back(std::move(walk));
        }
    }
    std::sort(result.faces.begin(), result.faces.end());
    for (int i = 0; i < isolated; ++i) result.faces.emplace_back();

    // orientable iff vertex signs +-1 exist with m(u) m(v) = sig(uv)
    std::vector<int> vsign(static_cast<std::size_t>(p), 0);
    result.orientable = true;
    for (int s0 = 0; s0 < p && result.orientable; ++s0) {
        if (vsign[static_cast<std::size_t>(s0)] != 0) continue;
        vsign[static_cast<std::size_t>(s0)] = 1;
        std::vector<int> stack{s0};
        while (!stack.empty() && result.orientable) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                int want = vsign[static_cast<std::size_t>(v)] *
                           sig[static_cast<std::size_t>(edge_id.at({std::min(u, v), std::max(u, v)}))];
                if (vsign[static_cast<std::size_t>(u)] == 0) {
                    vsign[static_cast<std::size_t>(u)] = want;
                    stack.push_back(u);
                } else if (vsign[static_cast<std::size_t>(u)] != want) {
                    result.orientable = false;
                    break;
                }
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// certificates

inline uint64_t edge_list_hash(int p, const std::vector<std::pair<int, int>>& sorted_edges) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(p));
    for (const auto& [u, v] : sorted_edges) {
        mix(static_cast<uint64_t>(u));
        mix(static_cast<uint64_t>(v));
    }
    return h;
}

struct EmbeddingCertificate {
    int p = 0;
    int q = 0;
    uint64_t edge_hash = 0;
    std::vector<std::pair<int, int>> edges;  // sorted
    SignedScheme scheme;
    int face_count = 0;
    int euler_genus = 0;
    bool orientable = true;
};

inline EmbeddingCertificate make_certificate(const Graph& g, const SignedScheme& scheme) {
    auto trace = trace_faces(g, scheme);
    EmbeddingCertificate cert;
    cert.p = g.vertex_count();
    cert.q = g.edge_count();
    cert.edges = g.edges();
    std::sort(cert.edges.begin(), cert.edges.end());
    cert.edge_hash = edge_list_hash(cert.p, cert.edges);
    cert.scheme = scheme;
    std::sort(cert.scheme.signatures.begin(), cert.scheme.signatures.end());
    cert.face_count = trace.face_count;
    cert.euler_genus = trace.euler_genus;
    cert.orientable = trace.orientable;
    return cert;
}

struct VerifyResult {
    bool ok = false;
    std::string reason;
};

inline VerifyResult verify_certificate(const Graph& g, const EmbeddingCertificate& cert) {
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    if (cert.p != g.vertex_count() || cert.q != g.edge_count() || cert.edges != edges ||
        cert.edge_hash != edge_list_hash(cert.p, edges))
        return {false, "fingerprint mismatch"};
    FaceTraceResult trace;
    try {
        trace = trace_faces(g, cert.scheme);
    } catch (const MalformedScheme& e) {
        return {false, std::string("malformed scheme: ") + e.what()};
    }
    if (trace.face_count != cert.face_count) return {false, "face count does not re-trace"};
    if (trace.euler_genus != cert.euler_genus) return {false, "euler genus does not re-trace"};
    if (trace.orientable != cert.orientable) return {false, "orientability flag does not re-trace"};
    return {true, {}};
}

inline std::string certificate_to_text(const EmbeddingCertificate& cert) {
    std::ostringstream os;
    os << "graph " << cert.p << " " << cert.q << "\n";
    for (const auto& [u, v] : cert.edges) os << "e " << u << " " << v << "\n";
    for (int v = 0; v < cert.p; ++v) {
        os << "rot " << v << ":";
        for (int u : cert.scheme.rotation[static_cast<std::size_t>(v)]) os << " " << u;
        os << "\n";
    }
    for (const auto& [e, s] : cert.scheme.signatures)
        os << "sig " << e.first << " " << e.second << " " << (s > 0 ? '+' : '-') << "\n";
    os << "faces " << cert.face_count << "\n";
    os << "euler-genus " << cert.euler_genus << "\n";
    os << "orientable " << (cert.orientable ? "true" : "false") << "\n";
    return os.str();
}

inline EmbeddingCertificate certificate_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    EmbeddingCertificate cert;
    bool have_graph = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "graph") {
            if (!(ls >> cert.p >> cert.q)) throw std::runtime_error("bad graph header");
            cert.scheme.rotation.assign(static_cast<std::size_t>(cert.p), {});
            have_graph = true;
        } else if (tok == "e") {
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw std::runtime_error("bad edge line");
            cert.edges.emplace_back(u, v);
        } else if (tok == "rot") {
            std::string head;
            ls >> head;  // "<v>:"
            if (!head.empty() && head.back() == ':') head.pop_back();
            int v = std::stoi(head);
            if (!have_graph || v < 0 || v >= cert.p) throw std::runtime_error("rotation for unknown vertex");
            int u = 0;
            while (ls >> u) cert.scheme.rotation[static_cast<std::size_t>(v)].push_back(u);
        } else if (tok == "sig") {
            int u = 0, v = 0;
            char s = '+';
            if (!(ls >> u >> v >> s)) throw std::runtime_error("bad signature line");
            cert.scheme.signatures.push_back({{u, v}, s == '+' ? +1 : -1});
        } else if (tok == "faces") {
            ls >> cert.face_count;
        } else if (tok == "euler-genus") {
            ls >> cert.euler_genus;
        } else if (tok == "orientable") {
            std::string b;
            ls >> b;
            cert.orientable = (b == "true");
        } else {
            throw std::runtime_error("unknown certificate line: " + tok);
        }
    }
    cert.edge_hash = edge_list_hash(cert.p, cert.edges);
    return cert;
}

}  // namespace ringtopo
