// Minimal walk through the library: posterior, verdict, frequency tree.

#include "bayesproof/bayesproof.hpp"

#include <iostream>

int main() {
    using namespace bayesproof;

    const Scenario blue_bus = make_scenario("0.4", "0.8", "0.1");
    const PosteriorBreakdown b = compute_posterior(blue_bus);
    std::cout << "p(H | E) = " << to_fraction_string(b.posterior.value()) << " = "
              << to_significant_string(b.posterior.value(), 4) << '\n';

    const Verdict v = decide(b);
    std::cout << "verdict at 0.5: " << to_string(v.outcome) << '\n';

    std::cout << '\n' << render_tree_text(build_tree(blue_bus));
}
