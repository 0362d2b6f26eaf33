// Acceptance gate: one line per criterion, exit status 0 iff all pass.
#include <cstdio>

#include "liecoh/battery.hpp"

int main() {
  using namespace liecoh;
  std::vector<BatteryCheck> battery = run_battery();
  std::vector<BatteryCheck> rerun = run_battery();
  bool deterministic = battery_serialize(battery) == battery_serialize(rerun);
  battery.push_back(
      {"determinism", deterministic, "two battery runs, byte-compared"});

  bool all = true;
  for (size_t i = 0; i < battery.size(); ++i) {
    const BatteryCheck& c = battery[i];
    std::printf("criterion %zu (%s): %s [%s]\n", i + 1, c.name.c_str(),
                c.pass ? "PASS" : "FAIL", c.detail.c_str());
    all = all && c.pass;
  }
  return all ? 0 : 1;
}
