// The verification record attached to every emitted result.
#pragma once

#include "radix/ints.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace radix {

struct Certificate {
    bool closure_ok = false;
    bool contains_one = false;
    std::map<Int, bool> pz_ok;  // prime -> End(I_q) == O
    bool disc_consistent = false;
    std::optional<bool> oracle_match;  // absent above the oracle budget
    std::vector<std::string> notes;

    bool certified() const {
        if (!closure_ok || !contains_one || !disc_consistent) return false;
        for (auto& [q, ok] : pz_ok)
            if (!ok) return false;
        if (oracle_match && !*oracle_match) return false;
        return true;
    }
};

}  // namespace radix
