class A {
    void m() {
        value = base;
    }
}
