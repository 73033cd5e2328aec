public class Countdown {
    public static void main(String[] args) {
        int x = 2;
        while (x > 0)
            x = x - 1;
    }
}
