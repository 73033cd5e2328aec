public class Spin {
    public static void main(String[] args) {
        int x = 1;
        while (x > 0)
            x = x + 0;
    }
}
