#pragma once

#include <memory>
#include <string>
#include <vector>

namespace nsym {

/// Naming context for a family of expressions: independent variables,
/// dependent variables and free parameters. Expressions reference entries
/// by index; the space is only needed to print or parse.
struct Space {
    struct Dep {
        std::string name;
        bool complex_valued = false;
    };
    struct Param {
        std::string name;
        bool real = true;
    };

    std::vector<std::string> vars;
    std::vector<Dep> deps;
    std::vector<Param> params;

    int axes() const { return (int)vars.size(); }

    int var_index(const std::string& n) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == n) return (int)i;
        return -1;
    }
    int dep_index(const std::string& n) const {
        for (std::size_t i = 0; i < deps.size(); ++i)
            if (deps[i].name == n) return (int)i;
        return -1;
    }
    int param_index(const std::string& n) const {
        for (std::size_t i = 0; i < params.size(); ++i)
            if (params[i].name == n) return (int)i;
        return -1;
    }
    int add_param(const std::string& n, bool real = true) {
        int id = param_index(n);
        if (id >= 0) return id;
        params.push_back({n, real});
        return (int)params.size() - 1;
    }
    int add_dep(const std::string& n, bool complex_valued) {
        deps.push_back({n, complex_valued});
        return (int)deps.size() - 1;
    }
};

using SpacePtr = std::shared_ptr<Space>;

}  // namespace nsym
