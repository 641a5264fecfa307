#include "carlitz/limits.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace carlitz {

Limits limits_from_env() {
    Limits lim;
    const char* env = std::getenv("CARLITZ_LIMITS");
    if (!env) return lim;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        long long value = std::atoll(item.c_str() + eq + 1);
        if (key == "max_carlitz_degree") lim.max_carlitz_degree = value;
        else if (key == "max_partition_n") lim.max_partition_n = static_cast<int>(value);
        else if (key == "max_prec") lim.max_prec = static_cast<int>(value);
        else if (key == "max_norm_dim") lim.max_norm_dim = static_cast<int>(value);
        else if (key == "max_goss_index") lim.max_goss_index = value;
    }
    return lim;
}

}  // namespace carlitz
