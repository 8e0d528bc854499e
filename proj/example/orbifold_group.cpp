// Runs the orbifold group computation for k = 1..4 and prints the result.

#include <iostream>

#include "pnh/pipeline.hpp"

int main() {
  for (unsigned k = 1; k <= 4; ++k) {
    pnh::PipelineReport r = pnh::run(k);
    std::cout << "k=" << k << "  " << r.final_presentation.str() << "\n"
              << "     order " << (r.order ? std::to_string(*r.order) : "?") << ", " << r.invariants.str()
              << (r.abelian ? ", abelian" : "") << (r.ok() ? "" : "  (checks failed)") << "\n";
  }
}
