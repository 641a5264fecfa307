#ifndef CARLITZ_LIMITS_HPP
#define CARLITZ_LIMITS_HPP

#include <cstdint>

namespace carlitz {

// Desk-scale caps.  The CLI can raise them through the CARLITZ_LIMITS
// environment variable ("key=value,key=value").
struct Limits {
    long long max_carlitz_degree = 59049;  // q^{nd} cap for Eisenstein quotients (3^10)
    int max_partition_n = 20;
    int max_prec = 100000;
    int max_norm_dim = 32;                 // q^d cap for the norm determinant
    long long max_goss_index = 4096;
};

Limits limits_from_env();

}  // namespace carlitz

#endif
