#include "wdsub/cli.hpp"

int main(int argc, char** argv) { return wdsub::run_cli(argc, argv); }
