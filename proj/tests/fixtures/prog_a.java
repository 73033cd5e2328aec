public class TestProgram {
    public static void main(String[] args) {
        int x = 3;
        int y = 4;
        int z = 0;
        if (x > y)
            z = y + 2;
        else
            z = y + 2;
        z = z + y;
        if (y > 5)
            z = z + 5;
        else
            z = z - 2;
        z = z + 3;
    }
}
