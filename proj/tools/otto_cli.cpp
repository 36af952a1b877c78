#include "otto/cli.hpp"

int main(int argc, char** argv) {
    return otto::cli::cli_main(argc, argv);
}
