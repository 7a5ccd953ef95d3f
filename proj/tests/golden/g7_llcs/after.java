class A {
    void m() {
        sort(Filterable, runner, Filterable);
    }
}
