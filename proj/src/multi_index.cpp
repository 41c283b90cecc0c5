#include "charn/multi_index.hpp"

#include "charn/error.hpp"

namespace charn {

namespace {

void emit_grade(int remaining, int coord, int d, std::vector<int>& current,
                std::vector<MultiIndex>& out) {
    if (coord == d - 1) {
        current[coord] = remaining;
        out.push_back(MultiIndex{current});
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        current[coord] = v;
        emit_grade(remaining - v, coord + 1, d, current, out);
    }
}

}  // namespace

std::vector<MultiIndex> multi_index_set(int d, int p) {
    if (d < 1) throw DomainError("multi_index_set: d must be >= 1");
    if (p < 0) throw DomainError("multi_index_set: p must be >= 0");
    std::vector<MultiIndex> out;
    std::vector<int> current(d, 0);
    for (int grade = 0; grade <= p; ++grade) emit_grade(grade, 0, d, current, out);
    return out;
}

long multi_index_count(int d, int p) {
    long c = 1;
    for (int i = 1; i <= p; ++i) c = c * (d + i) / i;
    return c;
}

}  // namespace charn
