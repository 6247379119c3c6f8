/** three.js point-cloud viewer with orbit camera and mask overlay tinting. */

import * as THREE from "three";
import { OrbitControls } from "three/examples/jsm/controls/OrbitControls.js";
import { pickPoint, type PickResult } from "./picking";
import { sceneBounds, type ScenePoints } from "./scene";

const MASK_TINT = new THREE.Color(1.0, 0.25, 0.2);

export class PointCloudViewer {
  private renderer: THREE.WebGLRenderer;
  private scene = new THREE.Scene();
  private camera: THREE.PerspectiveCamera;
  private controls: OrbitControls;
  private cloud: THREE.Points | null = null;
  private baseColors: Float32Array | null = null;
  private points: ScenePoints | null = null;
  overlayOpacity = 0.75;

  constructor(private canvas: HTMLCanvasElement) {
    this.renderer = new THREE.WebGLRenderer({ canvas, antialias: true });
    this.renderer.setPixelRatio(window.devicePixelRatio);
    this.scene.background = new THREE.Color(0x10141a);
    this.camera = new THREE.PerspectiveCamera(55, 1, 0.01, 100);
    this.controls = new OrbitControls(this.camera, canvas);
    this.controls.enableDamping = true;
    const animate = () => {
      requestAnimationFrame(animate);
      this.controls.update();
      this.renderer.render(this.scene, this.camera);
    };
    animate();
  }

  setSize(width: number, height: number): void {
    this.renderer.setSize(width, height, false);
    this.camera.aspect = width / height;
    this.camera.updateProjectionMatrix();
  }

  setPoints(points: ScenePoints, pointSize = 0.012): void {
    if (this.cloud) {
      this.scene.remove(this.cloud);
      this.cloud.geometry.dispose();
      (this.cloud.material as THREE.Material).dispose();
    }
    this.points = points;
    this.baseColors = points.colors.slice();
    const geometry = new THREE.BufferGeometry();
    geometry.setAttribute("position", new THREE.BufferAttribute(points.positions, 3));
    geometry.setAttribute("color", new THREE.BufferAttribute(points.colors.slice(), 3));
    const material = new THREE.PointsMaterial({ size: pointSize, vertexColors: true });
    this.cloud = new THREE.Points(geometry, material);
    this.scene.add(this.cloud);

    const { min, max } = sceneBounds(points);
    const center = new THREE.Vector3(
      (min[0] + max[0]) / 2, (min[1] + max[1]) / 2, (min[2] + max[2]) / 2,
    );
    const radius = Math.max(max[0] - min[0], max[1] - min[1], max[2] - min[2]);
    this.controls.target.copy(center);
    this.camera.position.set(center.x + radius, center.y - radius * 1.2, center.z + radius);
    this.camera.up.set(0, 0, 1);
    this.camera.lookAt(center);
  }

  /** Tint masked points, dim the rest by the overlay opacity. */
  applyOverlay(mask: Uint8Array): void {
    if (!this.cloud || !this.baseColors || !this.points) return;
    const attr = this.cloud.geometry.getAttribute("color") as THREE.BufferAttribute;
    const colors = attr.array as Float32Array;
    if (mask.length !== this.points.count) {
      throw new Error(`overlay mask length ${mask.length} != point count ${this.points.count}`);
    }
    const dim = 1.0 - this.overlayOpacity * 0.6;
    for (let i = 0; i < mask.length; i++) {
      const r = this.baseColors[i * 3];
      const g = this.baseColors[i * 3 + 1];
      const b = this.baseColors[i * 3 + 2];
      if (mask[i]) {
        colors[i * 3] = r * (1 - this.overlayOpacity) + MASK_TINT.r * this.overlayOpacity;
        colors[i * 3 + 1] = g * (1 - this.overlayOpacity) + MASK_TINT.g * this.overlayOpacity;
        colors[i * 3 + 2] = b * (1 - this.overlayOpacity) + MASK_TINT.b * this.overlayOpacity;
      } else {
        colors[i * 3] = r * dim;
        colors[i * 3 + 1] = g * dim;
        colors[i * 3 + 2] = b * dim;
      }
    }
    attr.needsUpdate = true;
  }

  clearOverlay(): void {
    if (!this.cloud || !this.baseColors) return;
    const attr = this.cloud.geometry.getAttribute("color") as THREE.BufferAttribute;
    (attr.array as Float32Array).set(this.baseColors);
    attr.needsUpdate = true;
  }

  /** Nearest rendered point within a pixel radius of the click, if any. */
  pickAt(clientX: number, clientY: number): PickResult | null {
    if (!this.points) return null;
    const rect = this.canvas.getBoundingClientRect();
    const vp = new THREE.Matrix4()
      .multiplyMatrices(this.camera.projectionMatrix, this.camera.matrixWorldInverse);
    return pickPoint(
      this.points.positions,
      vp.elements,
      clientX - rect.left,
      clientY - rect.top,
      rect.width,
      rect.height,
    );
  }
}
