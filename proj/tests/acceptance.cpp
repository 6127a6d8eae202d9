#include "vocal/selftest.hpp"

#include <iostream>

int main() {
    bool all = true;
    for (const auto& r : vocal::runAcceptanceChecks()) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.description;
        if (!r.pass && !r.detail.empty()) std::cout << " [" << r.detail << "]";
        std::cout << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
