class A {
    void m() {
        out = data.getBytes();
    }
}
