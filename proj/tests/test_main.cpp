#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <iostream>

#include "support.hpp"

int main(int argc, char** argv) {
  gkm::test::take_seed_flag(argc, argv);
  std::cout << "random seed: " << gkm::test::seed() << " (override with --seed N or GKM_TEST_SEED)\n";
  doctest::Context context(argc, argv);
  return context.run();
}
