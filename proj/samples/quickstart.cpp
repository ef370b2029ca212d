// Solve SC to triangle-free graphs on K_4 with both solvers, then build a
// small C8 reduction instance and map a satisfying assignment to a solution.
#include <iostream>

#include "subcomp.hpp"

int main() {
    using namespace sc;
    const Graph k4 = make_pattern(PatternSpec::complete(4));

    const SolveReport poly = solve_kt_free(k4, 3);
    const SolveReport brute = brute_solve(k4, make_pattern(PatternSpec::complete(3)));
    std::cout << "poly:  " << report_to_json(poly).dump() << '\n';
    std::cout << "brute: " << report_to_json(brute).dump() << '\n';

    const CnfFormula phi = parse_dimacs("p cnf 4 1\n1 -2 3 -4 0\n");
    const GadgetInstance inst = c8_gadget(phi);
    const Assignment a = *brute_sat(phi, 2);
    const VertexSet s = solution_from_assignment(inst, a);
    std::cout << "c8 instance: " << inst.graph.n() << " vertices, |S| = " << s.count()
              << ", C8-free after complementing: " << std::boolalpha << complement_is_target_free(inst, s) << '\n';
}
