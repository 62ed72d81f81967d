#include "gffdisc/lattice.hpp"

#include <cmath>

namespace gffdisc::lattice {

ColumnGeometry enumerate_columns(int d, int N, double M, int L) {
    if (d < 3 || d > kMaxDim) throw std::invalid_argument("enumerate_columns: need 3 <= d <= 8");
    if (L < 1) throw std::invalid_argument("enumerate_columns: need L >= 1");
    const long MN = static_cast<long>(std::floor(M * N));
    if (MN < N + 1)
        throw std::invalid_argument("enumerate_columns: invalid geometry, [MN] must be >= N+1");
    const long R = static_cast<long>(std::floor((M + 1) * N));  // boxes confined to B_{(M+1)N}

    // Transverse footprints: L-box corners on the coarse lattice whose half-open
    // footprint [t, t+L) lies inside the face range [-N, N].
    std::vector<std::int32_t> tvals;
    for (long t = -(N / L + 2) * (long)L; t <= N; t += L)
        if (t >= -N && t + L - 1 <= N) tvals.push_back(static_cast<std::int32_t>(t));

    // Axis offsets along the column: L-box corners z (multiples of L) with the
    // half-open interval [z, z+L) inside {x.e > N} cap [-R, R].
    std::vector<std::int32_t> avals_pos, avals_neg;
    for (long a = ((N + L) / L) * (long)L; a + L - 1 <= R; a += L)
        avals_pos.push_back(static_cast<std::int32_t>(a));
    if (!avals_pos.empty() && avals_pos.front() <= N)
        avals_pos.erase(avals_pos.begin());  // guard the ceil arithmetic at L | N
    for (long a = -((N + L + L - 1) / L) * (long)L; a >= -R; a -= L)
        if (a + L - 1 <= -(N + 1) && a >= -R) avals_neg.push_back(static_cast<std::int32_t>(a));

    ColumnGeometry geo;
    long tcount = static_cast<long>(tvals.size());
    long per_face = 1;
    for (int i = 0; i < d - 1; ++i) per_face *= tcount;
    geo.columns_per_face = (avals_pos.empty() ? 0 : per_face);
    geo.face_fraction_covered =
        std::pow(double(tcount) * L / double(2 * N + 1), d - 1);

    if ((avals_pos.empty() && avals_neg.empty()) || tcount == 0)
        return geo;  // degenerate: explicit empty result

    // Enumerate transverse multi-indices once; reuse for every face.
    std::vector<std::vector<std::int32_t>> tgrid;
    {
        std::vector<int> ix(d - 1, 0);
        for (;;) {
            std::vector<std::int32_t> t(d - 1);
            for (int i = 0; i < d - 1; ++i) t[i] = tvals[ix[i]];
            tgrid.push_back(std::move(t));
            int k = d - 2;
            while (k >= 0 && ++ix[k] == (int)tvals.size()) ix[k--] = 0;
            if (k < 0) break;
        }
    }

    for (int axis = 0; axis < d; ++axis)
        for (int sign = -1; sign <= 1; sign += 2) {
            const auto& avals = (sign > 0) ? avals_pos : avals_neg;
            if (avals.empty()) continue;
            for (const auto& t : tgrid) {
                ColumnSpec col;
                col.axis = axis;
                col.sign = sign;
                col.footprint_lo = Point::zero(d);
                int j = 0;
                for (int i = 0; i < d; ++i)
                    if (i != axis) col.footprint_lo.c[i] = t[j++];
                for (std::int32_t a : avals) {  // ordered by increasing x.e, i.e. outward
                    Point z = col.footprint_lo;
                    z.c[axis] = a;
                    col.boxes.push_back(z);
                }
                geo.boxes_total += static_cast<long>(col.boxes.size());
                geo.columns.push_back(std::move(col));
            }
        }
    return geo;
}

}  // namespace gffdisc::lattice
