// Generated by tests/oracles/freeze.py; do not edit by hand.
#pragma once
#include <complex>
namespace oracle {
inline constexpr const char* c10_1pi[2] = {"-13339616/40979909472125", "38737472/40979909472125"};
inline constexpr const char* c7_half[2] = {"1/40320", "0"};
inline constexpr const char* delta1_z2w[2] = {"1131/5000", "0"};
inline constexpr const char* bardelta1_z2w[2] = {"87/2000", "261/2500"};
inline constexpr const char* delta2_z2w[2] = {"15921/100000", "-5307/50000"};
inline constexpr const char* bardelta2_z2w[2] = {"783/100000", "-2001/50000"};
inline constexpr const char* delta3_z2w[2] = {"-3219/50000", "9657/62500"};
inline constexpr const char* bardelta3_z2w[2] = {"-10353/1000000", "261/25000"};
inline const std::complex<double> comm_half{0.41482004525041066, 0};
inline const std::complex<double> comm_1pi{0.84319287034253076, 0.94490294666438368};
inline const std::complex<double> annulus_exp_exp{1.0739387441732475, 0.30551969064841561};
inline constexpr const char* punctured_poly[2] = {"2133/625", "0"};
}  // namespace oracle
