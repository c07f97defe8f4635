#include "resgraph/definiteness.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace resgraph {

using BigInt = boost::multiprecision::cpp_int;

IncidenceMatrix incidence_matrix(const WeightedGraph& g) {
    const int n = g.vertex_count();
    IncidenceMatrix m;
    m.order = n;
    m.entries.assign(n, std::vector<long long>(n, 0));
    m.vertex_order.reserve(n);
    for (int i = 0; i < n; ++i) {
        m.vertex_order.push_back(g.vertices[i].id);
        m.entries[i][i] = g.vertices[i].weight;
    }
    for (const Edge& e : g.edges) {
        m.entries[e.u][e.v] += 1;
        m.entries[e.v][e.u] += 1;
    }
    return m;
}

namespace {

int sign_of(const BigInt& x) {
    if (x == 0) return 0;
    return x > 0 ? 1 : -1;
}

} // namespace

// Fraction-free (Bareiss) elimination without pivoting: after eliminating
// column k the (k,k) entry equals the (k+1)-th leading principal minor, so
// the Sylvester sign sequence falls out of a single sweep. A zero or
// wrong-signed pivot already decides the verdict, so the division by a
// zero pivot that plain Bareiss would hit next is never reached.
DefinitenessCertificate check_negative_definite(const IncidenceMatrix& m) {
    const int n = m.order;
    DefinitenessCertificate cert;

    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.entries[i][j];

    BigInt prev = 1;
    for (int k = 0; k < n; ++k) {
        const BigInt minor = a[k][k]; // leading principal minor of order k+1
        const int s = sign_of(minor);
        const int expected = (k % 2 == 0) ? -1 : 1;
        cert.minor_signs.push_back(s);
        if (s != expected) {
            cert.negative_definite = false;
            cert.failed_index = k + 1;
            cert.failed_sign = s;
            return cert;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = minor;
    }
    cert.negative_definite = true;
    return cert;
}

DefinitenessCertificate is_negative_definite(const WeightedGraph& g) {
    return check_negative_definite(incidence_matrix(g));
}

} // namespace resgraph
