#include <iostream>

#include "run.h"

int main(int argc, char** argv) {
  return magswim::cli::run(argc, argv, std::cout, std::cerr);
}
