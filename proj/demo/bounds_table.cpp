// Prints the covering-number bounds for d=3, eps=1/6 at a few curve orders,
// showing how the Hilbert row moves with m.

#include <symcover/bounds.hpp>

#include <cstdio>
#include <optional>

int main() {
    using namespace symcover::bounds;
    const std::vector<std::uint64_t> ns{250, 500, 750, 1000, 2000};
    const auto eps = Epsilon::ratio(1, 6);

    for (std::optional<unsigned> m : {std::optional<unsigned>(4), std::optional<unsigned>(10), std::optional<unsigned>()}) {
        std::printf("m = %s\n", m ? std::to_string(*m).c_str() : "inf");
        for (const auto& row : bounds_table(ns, 3, eps, m)) {
            std::printf("  n=%-5llu quotient %-9s hilbert %-10s lexsort %-10s hypercube %s\n",
                        static_cast<unsigned long long>(row.n), row.quotient.scientific().c_str(),
                        row.hilbert.scientific().c_str(), row.lexsort.scientific().c_str(),
                        row.hypercube.scientific().c_str());
        }
    }
    return 0;
}
