#include "maxcontract/cli_app.hpp"

int main(int argc, char** argv) { return maxcontract::run_cli(argc, argv); }
