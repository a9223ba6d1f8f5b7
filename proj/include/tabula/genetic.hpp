#pragma once

#include "tabula/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tabula {

/// One diachronic stratum; order 0 is the earliest. Two layers may share
/// an order — sharing is how simultaneity is expressed.
struct Layer {
    std::string id;
    int order = 0;
    std::string evidence;
};

/// A genetic hypothesis: cells assigned to layers plus the dependency
/// (earlier, later) pairs the hypothesis must respect. Assignments and
/// dependencies keep their authored order.
struct Stratification {
    std::string id;
    std::vector<std::pair<std::string, std::string>> assignment;    // cell -> layer
    std::vector<std::pair<std::string, std::string>> dependencies;  // earlier -> later
};

struct StratificationReport {
    bool consistent = true;
    std::vector<std::pair<std::string, std::string>> violations;
};

/// Lists every dependency whose layer orders are not strictly increasing.
/// Error("unknown layer ...") if the assignment names an undeclared layer.
StratificationReport validate_stratification(const Stratification& s,
                                             const std::vector<Layer>& layers);

struct Layering {
    int layer_count = 0;
    std::vector<std::pair<std::string, int>> assignment;  // cell -> order, domain order
};

/// Parsimony-minimal layering: order(v) = length of the longest dependency
/// path ending at v, so the layer count is 1 + the longest path length and
/// no consistent assignment can use fewer distinct strata.
/// `cells` seeds the domain (isolated cells stay at order 0); dependency
/// endpoints join it automatically. Error("cyclic dependency: ...") names
/// one cycle when the relation is not acyclic.
Layering minimal_layering(const std::vector<std::string>& cells,
                          const std::vector<std::pair<std::string, std::string>>& dependencies);

}  // namespace tabula
