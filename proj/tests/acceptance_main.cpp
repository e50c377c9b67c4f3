// placeholder - full acceptance suite filled in below
int main() { return 1; }
