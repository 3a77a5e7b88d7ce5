#pragma once

#include <vector>

#include "pdu/types.hpp"

namespace pdu::fft {

// Unnormalized DFT: out[n] = sum_j in[j] e^{-2*pi*i*j*n/N}.
std::vector<cdouble> forward(const std::vector<cdouble>& in);

// Unnormalized inverse kernel: out[j] = sum_n in[n] e^{+2*pi*i*j*n/N}.
std::vector<cdouble> backward(const std::vector<cdouble>& in);

}  // namespace pdu::fft
