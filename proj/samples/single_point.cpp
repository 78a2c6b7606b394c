// Evaluates all three policies for one station / eavesdropper placement in
// the 120 m reference layout.
//
//   single_point [sta_x sta_y eve_x eve_y]

#include <cstdio>
#include <cstdlib>

#include "secrecy/policy.hpp"

int main(int argc, char** argv) {
  secrecy::Point2D sta{20, 100};
  secrecy::Point2D eve{60, 80};
  if (argc == 5) {
    sta = {std::atof(argv[1]), std::atof(argv[2])};
    eve = {std::atof(argv[3]), std::atof(argv[4])};
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: %s [sta_x sta_y eve_x eve_y]\n", argv[0]);
    return 2;
  }

  const secrecy::Scenario s = secrecy::reference_scenario(sta);
  std::printf("%-9s %3s %12s %12s %12s %10s\n", "policy", "ap", "C_legit", "C_eve", "secrecy", "jam dBm");
  for (secrecy::PolicyKind kind : secrecy::kAllPolicies) {
    const secrecy::SelectionResult r = secrecy::select(kind, s, eve);
    const double dbm = secrecy::watts_to_dbm(secrecy::transmit_power(r.fj_power, s.params));
    std::printf("%-9s %3d %12.6f %12.6f %12.6f %10.3f\n", std::string(secrecy::to_string(kind)).c_str(),
                static_cast<int>(r.chosen_ap), r.cap_legit, r.cap_eve, r.secrecy, dbm);
  }
  return 0;
}
