#include "mconv/cli.hpp"

int main(int argc, char** argv) { return mconv::cli_main(argc, argv); }
