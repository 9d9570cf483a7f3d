#include "conecert/multi_index.hpp"

namespace conecert {

namespace {
void emit(int n, int d, int pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[pos] = e;
        emit(n, d - e, pos + 1, cur, out);
    }
}
}  // namespace

// Decreasing lexicographic order: (d,0,...,0) first, (0,...,0,d) last.
std::vector<MultiIndex> multi_indices_of_degree(int n, int d) {
    if (n <= 0) throw std::invalid_argument("multi_indices_of_degree: n must be positive");
    if (d < 0) return {};
    std::vector<MultiIndex> out;
    MultiIndex cur(n);
    emit(n, d, 0, cur, out);
    return out;
}

}  // namespace conecert
