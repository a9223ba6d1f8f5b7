#include "tabula/genetic.hpp"

#include <map>
#include <set>

namespace tabula {

StratificationReport validate_stratification(const Stratification& s,
                                             const std::vector<Layer>& layers) {
    std::map<std::string, int> order_of_layer;
    for (const Layer& layer : layers) {
        order_of_layer[layer.id] = layer.order;
    }
    std::map<std::string, int> order_of_cell;
    for (const auto& [cell, layer] : s.assignment) {
        auto it = order_of_layer.find(layer);
        if (it == order_of_layer.end()) {
            throw Error("unknown layer " + layer);
        }
        order_of_cell[cell] = it->second;
    }
    StratificationReport report;
    for (const auto& dep : s.dependencies) {
        auto earlier = order_of_cell.find(dep.first);
        auto later = order_of_cell.find(dep.second);
        if (earlier == order_of_cell.end() || later == order_of_cell.end()) {
            throw Error("unknown cell " + (earlier == order_of_cell.end() ? dep.first : dep.second));
        }
        if (!(earlier->second < later->second)) {
            report.violations.push_back(dep);
        }
    }
    report.consistent = report.violations.empty();
    return report;
}

Layering minimal_layering(const std::vector<std::string>& cells,
                          const std::vector<std::pair<std::string, std::string>>& dependencies) {
    // domain in first-appearance order
    std::vector<std::string> domain;
    std::set<std::string> seen;
    auto add = [&](const std::string& c) {
        if (seen.insert(c).second) {
            domain.push_back(c);
        }
    };
    for (const std::string& c : cells) {
        add(c);
    }
    for (const auto& dep : dependencies) {
        add(dep.first);
        add(dep.second);
    }

    std::map<std::string, std::vector<std::string>> successors;
    std::map<std::string, int> indegree;
    for (const std::string& c : domain) {
        indegree[c] = 0;
    }
    for (const auto& [earlier, later] : dependencies) {
        successors[earlier].push_back(later);
        indegree[later]++;
    }

    // Kahn's algorithm with longest-path propagation
    std::map<std::string, int> order;
    std::vector<std::string> ready;
    for (const std::string& c : domain) {
        if (indegree[c] == 0) {
            ready.push_back(c);
            order[c] = 0;
        }
    }
    std::size_t processed = 0;
    for (std::size_t head = 0; head < ready.size(); ++head) {
        const std::string v = ready[head];
        ++processed;
        for (const std::string& next : successors[v]) {
            order[next] = std::max(order.count(next) ? order[next] : 0, order[v] + 1);
            if (--indegree[next] == 0) {
                ready.push_back(next);
            }
        }
    }

    if (processed != domain.size()) {
        // Every node with residual indegree has an unprocessed predecessor,
        // so walking predecessors from any of them must close a cycle.
        std::set<std::string> stuck;
        for (const std::string& c : domain) {
            if (indegree[c] > 0) {
                stuck.insert(c);
            }
        }
        std::map<std::string, std::string> stuck_pred;
        for (const auto& [earlier, later] : dependencies) {
            if (stuck.count(earlier) && stuck.count(later) && !stuck_pred.count(later)) {
                stuck_pred[later] = earlier;
            }
        }
        std::vector<std::string> path{*stuck.begin()};
        std::map<std::string, std::size_t> index{{path[0], 0}};
        std::size_t start = 0;
        for (;;) {
            const std::string& pred = stuck_pred.at(path.back());
            auto hit = index.find(pred);
            if (hit != index.end()) {
                start = hit->second;
                break;
            }
            index[pred] = path.size();
            path.push_back(pred);
        }
        // path[i+1] -> path[i]; the closing edge is path[start] -> path.back()
        std::string text = path[start];
        for (std::size_t i = path.size(); i-- > start;) {
            text += " -> " + path[i];
        }
        throw Error("cyclic dependency: " + text);
    }

    Layering layering;
    int max_order = 0;
    for (const std::string& c : domain) {
        layering.assignment.emplace_back(c, order[c]);
        max_order = std::max(max_order, order[c]);
    }
    layering.layer_count = domain.empty() ? 0 : max_order + 1;
    return layering;
}

}  // namespace tabula
