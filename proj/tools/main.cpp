#include "bslab/cli.hpp"

int main(int argc, char* argv[]) {
  return bslab::cli::run_main(argc, argv);
}
