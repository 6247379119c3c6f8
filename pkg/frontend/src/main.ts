import { SessionApi } from "./api";
import { parseScene } from "./scene";
import { SessionController } from "./session";
import { PointCloudViewer } from "./viewer";

const API_BASE = import.meta.env.VITE_API_BASE ?? "http://127.0.0.1:8008";

const canvas = document.getElementById("viewer") as HTMLCanvasElement;
const sceneSelect = document.getElementById("scene-select") as HTMLSelectElement;
const labelMode = document.getElementById("label-mode") as HTMLSpanElement;
const status = document.getElementById("status") as HTMLSpanElement;
const iouBadge = document.getElementById("iou-badge") as HTMLSpanElement;
const clickList = document.getElementById("click-list") as HTMLUListElement;
const undoButton = document.getElementById("undo") as HTMLButtonElement;

const api = new SessionApi(API_BASE);
const viewer = new PointCloudViewer(canvas);
const session = new SessionController(api);

let busy = false; // single in-flight request per session

function resize() {
  viewer.setSize(canvas.clientWidth, canvas.clientHeight);
}
window.addEventListener("resize", resize);

session.onChange((state) => {
  viewer.applyOverlay(state.mask);
  status.textContent = `${state.trueCount} points / ${state.voxelCount} voxels in mask`;
  iouBadge.textContent = state.iou !== undefined ? `IoU ${state.iou.toFixed(3)}` : "";
  clickList.replaceChildren(
    ...state.clicks.map((c, i) => {
      const item = document.createElement("li");
      item.textContent = `${i + 1}. ${c.label} @ (${c.x.toFixed(2)}, ${c.y.toFixed(2)}, ${c.z.toFixed(2)})`;
      item.className = c.label;
      return item;
    }),
  );
});

async function loadScene(sceneId: string) {
  status.textContent = "loading scene...";
  const buffer = await api.fetchPoints(sceneId);
  viewer.setPoints(parseScene(buffer));
  await session.start(sceneId);
  status.textContent = `scene ${sceneId} ready`;
}

canvas.addEventListener("pointerdown", (event) => {
  // plain click = positive, shift-click = negative; drags orbit the camera
  const startX = event.clientX;
  const startY = event.clientY;
  const onUp = async (up: PointerEvent) => {
    canvas.removeEventListener("pointerup", onUp);
    if (Math.hypot(up.clientX - startX, up.clientY - startY) > 4) return; // was a drag
    if (busy) return;
    const hit = viewer.pickAt(up.clientX, up.clientY);
    if (!hit) {
      status.textContent = "no point under cursor";
      return;
    }
    busy = true;
    try {
      const label = up.shiftKey ? "negative" : "positive";
      await session.addClick(hit.position[0], hit.position[1], hit.position[2], label);
    } catch (err) {
      status.textContent = String(err);
    } finally {
      busy = false;
    }
  };
  canvas.addEventListener("pointerup", onUp);
});

window.addEventListener("keydown", (event) => {
  labelMode.textContent = event.shiftKey ? "negative" : "positive";
});
window.addEventListener("keyup", () => {
  labelMode.textContent = "positive";
});

undoButton.addEventListener("click", async () => {
  if (busy) return;
  busy = true;
  try {
    await session.undo();
  } finally {
    busy = false;
  }
});

sceneSelect.addEventListener("change", () => loadScene(sceneSelect.value));

(async () => {
  resize();
  const listing = await api.listScenes();
  sceneSelect.replaceChildren(
    ...listing.scenes.map((s) => {
      const opt = document.createElement("option");
      opt.value = s.id;
      opt.textContent = `${s.id} (${s.n_points} pts)`;
      return opt;
    }),
  );
  if (listing.scenes.length > 0) await loadScene(listing.scenes[0].id);
  else status.textContent = "no scenes on server";
})();
