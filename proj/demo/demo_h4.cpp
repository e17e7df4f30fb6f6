// Walks through the H_4 example: build the graph, its cover ideal, and test
// whether the maximal ideal is associated to the third and fourth powers.
#include <cpers/cpers.hpp>

#include <iostream>

int main() {
    using namespace cpers;

    const Graph h4 = build_hpq(3, 4);
    std::cout << "H_4: " << h4.vertex_count() << " vertices, " << h4.edge_count() << " edges\n";

    const auto chi = chromatic_number(h4);
    std::cout << "chi = " << chi.chromatic_number
              << ", critical: " << (is_critically_chromatic(h4, 4).critical ? "yes" : "no") << "\n";

    const MonomialIdeal j = cover_ideal(h4);
    std::cout << "J(H_4) has " << j.size() << " minimal generators\n";

    for (unsigned s : {3u, 4u}) {
        const AssReport r = pruned_witness_search(3, 4, s);
        std::cout << "s = " << s << ": m " << (r.member ? "is" : "is not") << " associated";
        if (r.witness)
            std::cout << ", witness " << to_text(*r.witness);
        std::cout << " (" << r.candidates_examined << " candidates)\n";
    }
}
